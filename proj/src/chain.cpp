#include "parthom/chain.hpp"

#include <stdexcept>

namespace parthom {

Chain Chain::simplex(const PartialPartition& f, Int coeff) {
    Chain ch(f.dimension());
    ch.add(f, coeff);
    return ch;
}

Int Chain::coeff(const PartialPartition& f) const {
    auto it = terms_.find(f);
    return it == terms_.end() ? Int(0) : it->second;
}

void Chain::add(const PartialPartition& f, const Int& c) {
    if (c == 0) return;
    if (f.dimension() != degree_)
        throw std::invalid_argument("simplex dimension does not match chain degree");
    auto [it, inserted] = terms_.emplace(f, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Chain& Chain::operator+=(const Chain& other) {
    if (degree_ != other.degree_)
        throw std::invalid_argument("chain degrees differ");
    for (const auto& [f, c] : other.terms_) add(f, c);
    return *this;
}

Chain& Chain::operator-=(const Chain& other) {
    if (degree_ != other.degree_)
        throw std::invalid_argument("chain degrees differ");
    for (const auto& [f, c] : other.terms_) add(f, -c);
    return *this;
}

Chain Chain::operator-() const {
    Chain out(degree_);
    for (const auto& [f, c] : terms_) out.add(f, -c);
    return out;
}

Chain boundary(const Chain& ch) {
    Chain out(ch.degree() - 1);
    for (const auto& [f, c] : ch.terms()) {
        for (int i = 0; i < f.block_count(); ++i) {
            Int sign = (i % 2 == 0) ? c : -c;
            out.add(f.without(i), sign);
        }
    }
    return out;
}

bool is_cycle(const Chain& ch) { return boundary(ch).zero(); }

} // namespace parthom
