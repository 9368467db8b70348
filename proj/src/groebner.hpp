#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "poly.hpp"

namespace cd4 {

/// Monomial orders: graded reverse lexicographic, lexicographic, and block
/// elimination orders (the block variables are compared first, by grevlex,
/// then the remaining variables, by grevlex).
class MonomialOrder {
public:
    enum class Kind { Grevlex, Lex, Block };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, {}); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
    static MonomialOrder block(const Ring& r, const std::vector<std::string>& first_block);

    Kind kind() const { return kind_; }
    const std::vector<std::string>& block_names() const { return block_names_; }

    /// Positive if a > b, negative if a < b, zero if equal.
    int compare(const Exps& a, const Exps& b) const;

    /// Bind the block mask to a ring (no-op for non-block orders).
    MonomialOrder rebound(const Ring& r) const;

private:
    MonomialOrder(Kind k, std::vector<std::string> names)
        : kind_(k), block_names_(std::move(names)) {}

    Kind kind_;
    std::vector<std::string> block_names_;
    std::vector<std::uint8_t> mask_; // 1 = first block, sized to the bound ring
};

/// Finitely generated ideal with a chosen monomial order.
struct Ideal {
    Ring ring;
    std::vector<Poly> gens;
    MonomialOrder order = MonomialOrder::grevlex();
};

/// Resource budget for Buchberger-type computations, counted in polynomial
/// reduction steps. Exceeding it throws BudgetExceeded.
struct GroebnerBudget {
    std::uint64_t max_reductions = 2'000'000;
};

/// Reduced Groebner basis: leading coefficients 1, every element tail-reduced
/// against the others, sorted descending by leading monomial.
std::vector<Poly> groebner_basis(const Ideal& ideal, const GroebnerBudget& budget = {});

/// Normal form of p against a (not necessarily reduced) basis.
Poly normal_form(const Poly& p, const std::vector<Poly>& basis, const MonomialOrder& order,
                 const GroebnerBudget& budget = {});

/// Generators of the elimination ideal with the named variables removed,
/// returned in the smaller ring.
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop,
                const GroebnerBudget& budget = {});

bool ideal_membership(const Poly& p, const Ideal& ideal, const GroebnerBudget& budget = {});

/// True iff some power of p lies in the ideal (decided in an extended ring
/// via 1 in I + <1 - u*p>).
bool radical_membership(const Poly& p, const Ideal& ideal, const GroebnerBudget& budget = {});

/// Saturation (I : p^infinity) through the extended-ring construction.
Ideal saturate(const Ideal& ideal, const Poly& p, const GroebnerBudget& budget = {});

/// The ideal <f, df/dv for v in vars>.
Ideal singular_locus(const Poly& f, const std::vector<std::string>& vars);

/// Unit-ideal Jacobian criterion: the equations define a smooth complete
/// intersection in the affine chart iff <eqs> + maximal Jacobian minors is
/// the unit ideal. The caller asserts the codimension.
bool is_smooth_affine(const std::vector<Poly>& eqs, const std::vector<std::string>& vars,
                      const GroebnerBudget& budget = {});

/// Milnor number at the origin: the local vector-space dimension of
/// ring/<df>. Computed by stabilising dim ring/(<df> + m^N); when N reaches
/// degree_bound without stabilising, either certifies a non-isolated
/// singular point at the origin (returns nullopt = infinity) or throws
/// BudgetExceeded ("indeterminate").
std::optional<std::uint64_t> jacobian_algebra_dim(const Poly& f,
                                                  const std::vector<std::string>& vars,
                                                  std::uint32_t degree_bound = 28,
                                                  const GroebnerBudget& budget = {});

} // namespace cd4
