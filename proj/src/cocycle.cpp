#include "gca/cocycle.hpp"

#include <algorithm>
#include <stdexcept>

namespace gca {

namespace {

const char* family_letter(Family f) {
    switch (f) {
        case Family::L: return "L";
        case Family::J: return "J";
        case Family::P1: return "P1";
        case Family::P2: return "P2";
        default: return "?";
    }
}

std::string pair_name(const CocycleSystem::FamilyPair& p) {
    return std::string(family_letter(p.first)) + family_letter(p.second);
}

}  // namespace

CocycleSystem::CocycleSystem(int window, std::set<Family> families,
                             std::set<FamilyTriple> excluded_triples)
    : window_(window), families_(std::move(families)), excluded_(std::move(excluded_triples)) {
    if (window_ < 4) throw std::invalid_argument("cocycle system: window must be >= 4");
    for (Family f : families_) {
        if (is_central(f)) throw std::invalid_argument("cocycle system: central family");
    }

    for (Family a : families_) {
        for (Family b : families_) {
            if (static_cast<int>(a) > static_cast<int>(b)) continue;
            const FamilyPair pair{a, b};
            if (a == b) {
                for (int m = 1; m <= window_; ++m) {
                    column_of_[{pair, m}] = columns_.size();
                    columns_.emplace_back(pair, m);
                }
            } else {
                for (int m = -window_; m <= window_; ++m) {
                    column_of_[{pair, m}] = columns_.size();
                    columns_.emplace_back(pair, m);
                }
            }
        }
    }
    build_rows();
}

std::size_t CocycleSystem::column_index(const FamilyPair& pair, int mode) const {
    auto it = column_of_.find({pair, mode});
    if (it == column_of_.end()) throw std::out_of_range("cocycle system: no such column");
    return it->second;
}

bool CocycleSystem::has_column(const FamilyPair& pair, int mode) const {
    return column_of_.count({pair, mode}) > 0;
}

std::vector<std::pair<std::size_t, Rational>> CocycleSystem::unknown_of(
    const GenLabel& x, const GenLabel& y) const {
    // Degree-zero ansatz: c(X_m, Y_n) = 0 unless m + n = 0.
    if (x.mode + y.mode != 0) return {};
    Family a = x.family, b = y.family;
    int m = x.mode;
    Rational sign(1);
    if (static_cast<int>(a) > static_cast<int>(b)) {
        std::swap(a, b);
        m = y.mode;
        sign = -sign;
    }
    if (a == b) {
        if (m == 0) return {};
        if (m < 0) {
            m = -m;
            sign = -sign;
        }
    }
    return {{column_index({a, b}, m), sign}};
}

void CocycleSystem::build_rows() {
    std::vector<GenLabel> labels;
    for (Family f : families_) {
        for (int m = -window_; m <= window_; ++m) labels.push_back({f, m});
    }
    std::sort(labels.begin(), labels.end());

    auto add_term = [this](RationalVector& row, const AlgebraElement& br, const GenLabel& z,
                           const Rational& outer) {
        for (const auto& [label, coeff] : br.terms()) {
            for (const auto& [col, sign] : unknown_of(label, z)) {
                row[col] += outer * coeff * sign;
            }
        }
    };

    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = i; j < labels.size(); ++j) {
            for (std::size_t k = j; k < labels.size(); ++k) {
                const GenLabel x = labels[i], y = labels[j], z = labels[k];
                if (x.mode + y.mode + z.mode != 0) continue;
                FamilyTriple triple{x.family, y.family, z.family};
                std::sort(triple.begin(), triple.end());
                if (excluded_.count(triple)) continue;

                RationalVector row(columns_.size(), Rational(0));
                add_term(row, bracket(x, y, /*centerless=*/true), z, Rational(1));
                add_term(row, bracket(y, z, /*centerless=*/true), x, Rational(1));
                add_term(row, bracket(z, x, /*centerless=*/true), y, Rational(1));
                bool nonzero = false;
                for (const auto& v : row) {
                    if (v != 0) {
                        nonzero = true;
                        break;
                    }
                }
                if (nonzero) rows_.push_back(std::move(row));
            }
        }
    }
}

std::vector<RationalVector> CocycleSystem::coboundaries() const {
    std::vector<RationalVector> out;
    for (Family f : families_) {
        const GenLabel zero_mode{f, 0};
        RationalVector v(columns_.size(), Rational(0));
        bool nonzero = false;
        for (std::size_t col = 0; col < columns_.size(); ++col) {
            const auto& [pair, m] = columns_[col];
            const AlgebraElement br =
                bracket(GenLabel{pair.first, m}, GenLabel{pair.second, -m}, /*centerless=*/true);
            const Rational c = br.coeff(zero_mode);
            if (c != 0) {
                v[col] = c;
                nonzero = true;
            }
        }
        if (nonzero) out.push_back(std::move(v));
    }
    return out;
}

CocycleReport analyze(const CocycleSystem& system) {
    CocycleReport report;
    report.window = system.window();

    const std::size_t cols = system.num_unknowns();
    RationalMatrix constraints = system.constraints();
    const std::vector<RationalVector> kernel = nullspace(constraints, cols);
    report.solution_dimension = kernel.size();

    // Coboundaries must lie in the kernel; rank them inside it.
    const std::vector<RationalVector> cob = system.coboundaries();
    report.coboundaries_are_cocycles = true;
    for (const auto& b : cob) {
        for (const auto& row : system.constraints()) {
            Rational dot(0);
            for (std::size_t c = 0; c < cols; ++c) dot += row[c] * b[c];
            if (dot != 0) report.coboundaries_are_cocycles = false;
        }
    }
    RationalMatrix cob_matrix(cob.begin(), cob.end());
    report.coboundary_rank = cob.empty() ? 0 : rank(cob_matrix);
    report.dimension = report.solution_dimension - report.coboundary_rank;

    // Gauge-fixed representatives: additionally demand c_XY(1) = 0 for the
    // pairs a coboundary can shift (LL via L0*, LJ via J0*, LP1/LP2 and the
    // JP cross terms via P0*; fixing the LP entries suffices since the P0*
    // coboundaries are independent there).
    RationalMatrix gauged = system.constraints();
    for (const auto& pair : {CocycleSystem::FamilyPair{Family::L, Family::L},
                             CocycleSystem::FamilyPair{Family::L, Family::J},
                             CocycleSystem::FamilyPair{Family::L, Family::P1},
                             CocycleSystem::FamilyPair{Family::L, Family::P2}}) {
        if (!system.has_column(pair, 1)) continue;
        RationalVector row(cols, Rational(0));
        row[system.column_index(pair, 1)] = Rational(1);
        gauged.push_back(std::move(row));
    }
    std::vector<RationalVector> reps = nullspace(std::move(gauged), cols);

    // Canonical shape: eliminate across representatives with the LL(2),
    // JJ(1) and LJ(2) columns as leading entries so the known directions
    // come out split, then rescale the LL direction to m(m^2-1)/12 (which
    // reads 1/2 at m = 2); the others keep their leading 1.
    std::vector<std::size_t> priority;
    if (system.has_column({Family::L, Family::L}, 2)) {
        priority.push_back(system.column_index({Family::L, Family::L}, 2));
    }
    if (system.has_column({Family::J, Family::J}, 1)) {
        priority.push_back(system.column_index({Family::J, Family::J}, 1));
    }
    if (system.has_column({Family::L, Family::J}, 2)) {
        priority.push_back(system.column_index({Family::L, Family::J}, 2));
    }
    std::size_t placed = 0;
    for (std::size_t lead : priority) {
        std::size_t which = reps.size();
        for (std::size_t r = placed; r < reps.size(); ++r) {
            if (reps[r][lead] != 0) {
                which = r;
                break;
            }
        }
        if (which == reps.size()) continue;
        std::swap(reps[which], reps[placed]);
        const Rational scale = Rational(1) / reps[placed][lead];
        for (auto& v : reps[placed]) v *= scale;
        for (std::size_t r = 0; r < reps.size(); ++r) {
            if (r == placed || reps[r][lead] == 0) continue;
            const Rational f = reps[r][lead];
            for (std::size_t c = 0; c < cols; ++c) reps[r][c] -= f * reps[placed][c];
        }
        ++placed;
    }
    if (system.has_column({Family::L, Family::L}, 2)) {
        const std::size_t ll2 = system.column_index({Family::L, Family::L}, 2);
        for (auto& rep : reps) {
            if (rep[ll2] == 1) {
                for (auto& v : rep) v *= Rational(1, 2);
            }
        }
    }

    const auto& columns = system.columns();
    for (const auto& rep : reps) {
        std::vector<CocycleRepresentativeEntry> entries;
        for (std::size_t c = 0; c < cols; ++c) {
            if (rep[c] == 0) continue;
            entries.push_back({pair_name(columns[c].first), columns[c].second, rep[c]});
        }
        report.representatives.push_back(std::move(entries));
    }

    // Exotic component test on interior modes. P-P columns are untouched
    // by coboundaries, so checking representatives covers every solution.
    const int interior = system.window() - 2;
    report.exotic_possible = false;
    for (const auto& rep : reps) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (rep[c] == 0) continue;
            const auto& [pair, m] = columns[c];
            const bool pp = (pair.first == Family::P1 || pair.first == Family::P2) &&
                            (pair.second == Family::P1 || pair.second == Family::P2);
            if (pp && std::abs(m) <= interior) report.exotic_possible = true;
        }
    }
    return report;
}

CocycleReport solve_cocycles(int window) { return analyze(CocycleSystem(window)); }

bool exotic_check(int window) { return !solve_cocycles(window).exotic_possible; }

}  // namespace gca
