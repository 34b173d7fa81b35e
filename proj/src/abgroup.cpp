#include "ttchow/abgroup.hpp"

#include <algorithm>
#include <sstream>

namespace ttchow {

FgAbGroup FgAbGroup::cyclic(const Int& n) {
    if (n < 0) throw Error(ErrorCode::validation, "cyclic order must be nonnegative");
    if (n == 0) return free_of_rank(1);
    if (n == 1) return trivial();
    return FgAbGroup{0, {n}};
}

Int FgAbGroup::order() const {
    if (rank != 0) throw Error(ErrorCode::domain, "order of an infinite group");
    Int o = 1;
    for (const Int& d : torsion) o *= d;
    return o;
}

bool is_isomorphic(const FgAbGroup& a, const FgAbGroup& b) { return a == b; }

namespace {

// Invariant factors of the direct sum of the given cyclic factors, via the
// Smith form of the diagonal matrix they span.
std::vector<Int> merge_torsion(std::vector<Int> factors) {
    factors.erase(std::remove_if(factors.begin(), factors.end(),
                                 [](const Int& d) { return d == 1; }),
                  factors.end());
    if (factors.size() <= 1) return factors;
    SmithForm f = smith_normal_form(IntMatrix::diagonal(factors));
    std::vector<Int> out;
    for (const Int& d : f.diagonal())
        if (d >= 2) out.push_back(d);
    return out;
}

}  // namespace

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> t = a.torsion;
    t.insert(t.end(), b.torsion.begin(), b.torsion.end());
    return FgAbGroup{a.rank + b.rank, merge_torsion(std::move(t))};
}

std::string SymbolTerm::qualifier() const {
    if (inverted == 0) return "";
    return "after inverting " + inverted.get_str();
}

FgAbGroup GroupExpr::to_group() const {
    if (!symbols.empty())
        throw Error(ErrorCode::domain, "group expression has unresolved symbolic summands");
    return FgAbGroup{rank, torsion};
}

void GroupExpr::normalize() {
    torsion = merge_torsion(std::move(torsion));
    std::sort(symbols.begin(), symbols.end());
}

GroupExpr direct_sum(const GroupExpr& a, const GroupExpr& b) {
    GroupExpr out;
    out.rank = a.rank + b.rank;
    out.torsion = a.torsion;
    out.torsion.insert(out.torsion.end(), b.torsion.begin(), b.torsion.end());
    out.symbols = a.symbols;
    out.symbols.insert(out.symbols.end(), b.symbols.begin(), b.symbols.end());
    out.normalize();
    return out;
}

GroupExpr invert_integer(const GroupExpr& g, const Int& n) {
    if (n < 1) throw Error(ErrorCode::validation, "can only invert a positive integer");
    if (n == 1) return g;
    GroupExpr out;
    out.rank = g.rank;
    for (Int d : g.torsion) {
        // Strip every prime factor of n to full multiplicity.
        for (;;) {
            Int c = gcd(d, n);
            if (c == 1) break;
            d /= c;
        }
        if (d >= 2) out.torsion.push_back(d);
    }
    for (SymbolTerm s : g.symbols) {
        s.inverted = (s.inverted == 0) ? n : lcm(s.inverted, n);
        out.symbols.push_back(std::move(s));
    }
    out.normalize();
    return out;
}

namespace {

std::string format_parts(std::size_t rank, const std::vector<Int>& torsion,
                         const std::vector<SymbolTerm>& symbols) {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " + ";
        first = false;
    };
    if (rank == 1) {
        sep();
        os << "Z";
    } else if (rank > 1) {
        sep();
        os << "Z^" << rank;
    }
    for (const Int& d : torsion) {
        sep();
        os << "Z/" << d;
    }
    for (const SymbolTerm& s : symbols) {
        sep();
        os << s.name;
        if (s.inverted != 0) os << " [" << s.qualifier() << "]";
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

std::string format_group(const FgAbGroup& g) { return format_parts(g.rank, g.torsion, {}); }
std::string format_group(const GroupExpr& g) {
    return format_parts(g.rank, g.torsion, g.symbols);
}

Presentation::Presentation(std::size_t gens, IntMatrix rels)
    : generators(gens), relations(std::move(rels)) {
    if (relations.rows() != generators)
        throw Error(ErrorCode::validation,
                    "relation matrix must have one row per generator");
}

Presentation Presentation::of_group(const FgAbGroup& g) {
    std::size_t gens = g.rank + g.torsion.size();
    IntMatrix rels(gens, g.torsion.size());
    for (std::size_t k = 0; k < g.torsion.size(); ++k) rels.at(g.rank + k, k) = g.torsion[k];
    return Presentation(gens, std::move(rels));
}

FgAbGroup quotient_group(const Presentation& p) {
    SmithForm f = smith_normal_form(p.relations);
    FgAbGroup g;
    std::size_t nonzero = 0;
    for (const Int& d : f.diagonal()) {
        if (d == 0) continue;
        ++nonzero;
        if (d >= 2) g.torsion.push_back(d);
    }
    g.rank = p.generators - nonzero;
    return g;
}

AbMap::AbMap(Presentation domain, Presentation codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != codomain_.generators || matrix_.cols() != domain_.generators)
        throw Error(ErrorCode::validation,
                    "map matrix must be codomain generators x domain generators");
    if (domain_.relations.cols() == 0) return;
    ColumnLattice target(codomain_.relations);
    IntMatrix mapped = matrix_ * domain_.relations;
    for (std::size_t j = 0; j < mapped.cols(); ++j)
        if (!target.contains(mapped.column(j)))
            throw Error(ErrorCode::validation,
                        "map does not send domain relations into codomain relations "
                        "(relation " + std::to_string(j) + ")");
}

AbMap AbMap::zero(const Presentation& domain, const Presentation& codomain) {
    return AbMap(domain, codomain, IntMatrix(codomain.generators, domain.generators));
}

FgAbGroup cokernel(const AbMap& f) {
    return quotient_group(Presentation(
        f.codomain().generators, f.matrix().hconcat(f.codomain().relations)));
}

FgAbGroup image(const AbMap& f) {
    // Image of the induced map on quotients: (im A + rel) / rel.
    ColumnLattice total(f.matrix().hconcat(f.codomain().relations));
    const IntMatrix& basis = total.basis();
    IntMatrix rel_in_basis(basis.cols(), f.codomain().relations.cols());
    for (std::size_t j = 0; j < f.codomain().relations.cols(); ++j) {
        auto w = total.coordinates(f.codomain().relations.column(j));
        if (!w) throw Error(ErrorCode::internal, "relation escaped its own span");
        rel_in_basis.set_column(j, *w);
    }
    return quotient_group(Presentation(basis.cols(), std::move(rel_in_basis)));
}

KernelData kernel_data(const AbMap& f) {
    // x lies in the kernel iff A x lands in the codomain relation lattice,
    // i.e. (x, y) solves [A | R_cod] * (x, y)^T = 0 for some y.
    IntMatrix combined = f.matrix().hconcat(f.codomain().relations);
    IntMatrix ker = kernel_basis(combined);
    ColumnLattice preimage(ker.top_rows(f.domain().generators));
    const IntMatrix& basis = preimage.basis();
    IntMatrix rel(basis.cols(), f.domain().relations.cols());
    for (std::size_t j = 0; j < f.domain().relations.cols(); ++j) {
        auto w = preimage.coordinates(f.domain().relations.column(j));
        if (!w)
            throw Error(ErrorCode::internal,
                        "domain relation outside the kernel preimage lattice");
        rel.set_column(j, *w);
    }
    FgAbGroup g = quotient_group(Presentation(basis.cols(), rel));
    return KernelData{std::move(g), basis, std::move(rel)};
}

FgAbGroup kernel(const AbMap& f) { return kernel_data(f).group; }

}  // namespace ttchow
