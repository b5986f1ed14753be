#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gca/algebra.hpp"
#include "gca/linalg.hpp"

namespace gca {

// Degree-zero 2-cocycle ansatz on the centerless algebra over a mode
// window: one unknown per family pair and mode, c(X_m, Y_-m). Antisymmetry
// is built in, so same-family pairs store only m >= 1.
class CocycleSystem {
  public:
    // Unordered family pair, first <= second in family order.
    using FamilyPair = std::pair<Family, Family>;
    using FamilyTriple = std::array<Family, 3>;  // sorted

    // `families` restricts the sub-algebra under consideration;
    // `excluded_triples` drops the cocycle identities coming from the
    // listed (sorted) family triples. Both knobs exist for the ablation
    // oracles; the default system is the full one.
    CocycleSystem(int window, std::set<Family> families = {Family::L, Family::J, Family::P1,
                                                           Family::P2},
                  std::set<FamilyTriple> excluded_triples = {});

    int window() const { return window_; }
    std::size_t num_unknowns() const { return columns_.size(); }
    const std::vector<std::pair<FamilyPair, int>>& columns() const { return columns_; }

    // One row per generator triple (modes summing to zero inside the
    // window): c([X,Y],Z) + c([Y,Z],X) + c([Z,X],Y) = 0.
    const RationalMatrix& constraints() const { return rows_; }

    // Coboundary vectors c(X, Y) = lambda([X, Y]) for lambda dual to each
    // degree-zero label of the included families.
    std::vector<RationalVector> coboundaries() const;

    // Expands c(X_m, Y_n) into unknown columns: list of (column, sign).
    std::vector<std::pair<std::size_t, Rational>> unknown_of(const GenLabel& x,
                                                             const GenLabel& y) const;

    std::size_t column_index(const FamilyPair& pair, int mode) const;
    bool has_column(const FamilyPair& pair, int mode) const;

  private:
    void build_rows();

    int window_;
    std::set<Family> families_;
    std::set<FamilyTriple> excluded_;
    std::vector<std::pair<FamilyPair, int>> columns_;
    std::map<std::pair<FamilyPair, int>, std::size_t> column_of_;
    RationalMatrix rows_;
};

struct CocycleRepresentativeEntry {
    std::string pair;  // "LL", "LJ", ...
    int mode;
    Rational value;
};

struct CocycleReport {
    int window = 0;
    std::size_t solution_dimension = 0;    // raw nullspace dimension
    std::size_t coboundary_rank = 0;       // rank of coboundaries inside it
    std::size_t dimension = 0;             // modulo coboundaries
    bool coboundaries_are_cocycles = false;
    std::vector<std::vector<CocycleRepresentativeEntry>> representatives;
    bool exotic_possible = false;  // any P-P component on interior modes
};

// Solves the constraint system, quotients by coboundaries via the gauge
// c_LL(1) = c_LJ(1) = c_LP1(1) = c_LP2(1) = 0 and returns canonical
// representatives: the Virasoro direction scaled to c_LL(m) = m(m^2-1)/12,
// the current direction to c_JJ(m) = m, and the mixed current-twist
// direction to c_LJ(m) = m(m-1)/2, whichever are present.
CocycleReport solve_cocycles(int window);

// True iff no solution has a P-P component on interior modes |m| <=
// window - 2.
bool exotic_check(int window);

// Same analysis for an arbitrary (possibly ablated) system. Used by the
// oracle tests.
CocycleReport analyze(const CocycleSystem& system);

}  // namespace gca
