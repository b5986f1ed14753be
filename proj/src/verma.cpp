#include "gca/verma.hpp"

#include <algorithm>
#include <sstream>

namespace gca {

PBWMonomial::PBWMonomial(std::vector<GenLabel> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].central() || factors_[i].mode >= 0) {
            throw std::invalid_argument("pbw monomial: factor " + factors_[i].str() +
                                        " is not a lowering generator");
        }
        if (i > 0 && factors_[i] < factors_[i - 1]) {
            throw std::invalid_argument("pbw monomial: factors not in canonical order");
        }
    }
}

const PBWMonomial& PBWMonomial::vacuum() {
    static const PBWMonomial v;
    return v;
}

int PBWMonomial::level() const {
    int sum = 0;
    for (const auto& f : factors_) sum += f.degree();
    return sum;
}

std::string PBWMonomial::str() const {
    if (factors_.empty()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out << "*";
        out << factors_[i].str();
    }
    return out.str();
}

namespace {

void extend(std::vector<PBWMonomial>& out, std::vector<GenLabel>& prefix, int remaining,
            const std::vector<GenLabel>& labels, std::size_t min_index) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (std::size_t i = min_index; i < labels.size(); ++i) {
        if (labels[i].degree() > remaining) continue;
        prefix.push_back(labels[i]);
        extend(out, prefix, remaining - labels[i].degree(), labels, i);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<PBWMonomial> pbw_basis(int level) {
    if (level < 0) throw std::invalid_argument("pbw_basis: level must be >= 0");
    if (level == 0) return {PBWMonomial::vacuum()};

    // All lowering labels usable at this level, in canonical factor order.
    std::vector<GenLabel> labels;
    for (Family f : {Family::L, Family::J, Family::P1, Family::P2}) {
        for (int m = -level; m <= -1; ++m) labels.push_back({f, m});
    }
    std::sort(labels.begin(), labels.end());

    std::vector<PBWMonomial> out;
    std::vector<GenLabel> prefix;
    extend(out, prefix, level, labels, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gca
