#pragma once

#include "ttchow/intmatrix.hpp"

#include <compare>
#include <string>
#include <vector>

namespace ttchow {

/// Finitely generated abelian group in invariant-factor normal form:
/// Z^rank + Z/d1 + ... + Z/dm with 2 <= d1 | d2 | ... | dm.
/// Two values are isomorphic as groups iff they compare equal.
struct FgAbGroup {
    std::size_t rank = 0;
    std::vector<Int> torsion;

    static FgAbGroup free_of_rank(std::size_t r) { return FgAbGroup{r, {}}; }
    static FgAbGroup trivial() { return {}; }
    static FgAbGroup cyclic(const Int& n);

    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    bool is_free() const { return torsion.empty(); }
    /// Order of the group; only valid when rank == 0.
    Int order() const;

    bool operator==(const FgAbGroup&) const = default;
};

bool is_isomorphic(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);

/// Named opaque summand of a group expression, e.g. Pic(C) or Cl(Abar).
/// `inverted` != 0 marks the summand as taken after inverting that integer.
struct SymbolTerm {
    std::string name;
    Int inverted = 0;

    std::string qualifier() const;  // "" or "after inverting n"
    bool operator==(const SymbolTerm&) const = default;
    auto operator<=>(const SymbolTerm&) const = default;
};

/// Formal direct sum of a free part, a torsion chain and opaque symbols.
/// Kept normalized: torsion in invariant-factor form, symbols sorted.
struct GroupExpr {
    std::size_t rank = 0;
    std::vector<Int> torsion;
    std::vector<SymbolTerm> symbols;

    static GroupExpr from_group(const FgAbGroup& g) { return {g.rank, g.torsion, {}}; }
    static GroupExpr free_of_rank(std::size_t r) { return {r, {}, {}}; }
    static GroupExpr symbol(const std::string& name) { return {0, {}, {SymbolTerm{name, 0}}}; }
    static GroupExpr trivial() { return {}; }

    bool is_concrete() const { return symbols.empty(); }
    bool is_trivial() const { return rank == 0 && torsion.empty() && symbols.empty(); }
    /// Loses nothing when symbols are empty; throws otherwise.
    FgAbGroup to_group() const;

    void normalize();

    bool operator==(const GroupExpr&) const = default;
};

GroupExpr direct_sum(const GroupExpr& a, const GroupExpr& b);
GroupExpr invert_integer(const GroupExpr& g, const Int& n);

std::string format_group(const FgAbGroup& g);
std::string format_group(const GroupExpr& g);

/// Group presented as Z^generators / column span of `relations`
/// (one column per relation; relations.rows() == generators).
struct Presentation {
    std::size_t generators = 0;
    IntMatrix relations;

    Presentation() : relations(0, 0) {}
    Presentation(std::size_t gens, IntMatrix rels);
    static Presentation free_group(std::size_t gens) {
        return Presentation(gens, IntMatrix(gens, 0));
    }
    static Presentation of_group(const FgAbGroup& g);

    bool operator==(const Presentation&) const = default;
};

/// Isomorphism type of the presented quotient.
FgAbGroup quotient_group(const Presentation& p);

/// Homomorphism between presented groups, carried by a matrix on generators.
/// Construction checks shapes and that domain relations land in the column
/// span of the codomain relations.
class AbMap {
public:
    AbMap(Presentation domain, Presentation codomain, IntMatrix matrix);

    static AbMap zero(const Presentation& domain, const Presentation& codomain);

    const Presentation& domain() const { return domain_; }
    const Presentation& codomain() const { return codomain_; }
    const IntMatrix& matrix() const { return matrix_; }

    bool operator==(const AbMap&) const = default;

private:
    Presentation domain_, codomain_;
    IntMatrix matrix_;
};

FgAbGroup cokernel(const AbMap& f);
FgAbGroup image(const AbMap& f);
FgAbGroup kernel(const AbMap& f);

/// Kernel together with its realization: `embedding` has independent columns
/// spanning the preimage lattice in the domain's generator space, and the
/// kernel group is Z^dim / column span of `relations`.
struct KernelData {
    FgAbGroup group;
    IntMatrix embedding;
    IntMatrix relations;
};
KernelData kernel_data(const AbMap& f);

/// A computed group expression together with the rule ids that produced it.
struct Derived {
    GroupExpr value;
    std::vector<std::string> rules;
    std::vector<std::string> warnings;
};

}  // namespace ttchow
