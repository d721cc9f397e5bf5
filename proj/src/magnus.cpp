/*
 * Copyright 2026 The etog authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "etog/magnus.hpp"

#include <limits>
#include <stdexcept>

#include "etog/error.hpp"

namespace etog {

TruncatedSeries::TruncatedSeries(unsigned maxDegree) : maxDegree_(maxDegree)
{
    coeffs_.emplace(Monomial{}, BigInt(1));
}

BigInt TruncatedSeries::coefficient(const Monomial& m) const
{
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

void TruncatedSeries::add(const Monomial& m, const BigInt& c)
{
    if (m.size() > maxDegree_ || c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

TruncatedSeries& TruncatedSeries::multiplyLetter(const Letter& letter)
{
    // x^+1 -> 1 + g ;  x^-1 -> 1 - g + g^2 - ...
    std::vector<std::pair<Monomial, BigInt>> extra;
    for (const auto& [m, c] : coeffs_) {
        Monomial grown = m;
        BigInt term = c;
        for (std::size_t deg = m.size() + 1; deg <= maxDegree_; ++deg) {
            grown.push_back(letter.gen);
            if (letter.exp < 0) term = -term;
            extra.emplace_back(grown, term);
            if (letter.exp > 0) break;
        }
    }
    for (const auto& [m, c] : extra) add(m, c);
    return *this;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const
{
    TruncatedSeries out(std::min(maxDegree_, rhs.maxDegree_));
    out.coeffs_.clear();
    for (const auto& [m1, c1] : coeffs_) {
        for (const auto& [m2, c2] : rhs.coeffs_) {
            if (m1.size() + m2.size() > out.maxDegree_) continue;
            Monomial m = m1;
            m.insert(m.end(), m2.begin(), m2.end());
            out.add(m, c1 * c2);
        }
    }
    return out;
}

std::optional<std::pair<Monomial, BigInt>> TruncatedSeries::leadingTerm(MonomialScan scan) const
{
    if (scan == MonomialScan::FaultyAbFirst) {
        const Monomial g0{0};
        const Monomial g0g1{0, 1};
        BigInt c = coefficient(g0);
        if (c != 0) return std::make_pair(g0, c);
        c = coefficient(g0g1);
        if (c != 0) return std::make_pair(g0g1, c);
        for (const auto& [m, coef] : coeffs_) {
            if (m.empty() || m == g0 || m == g0g1) continue;
            return std::make_pair(m, coef);
        }
        return std::nullopt;
    }
    for (const auto& [m, c] : coeffs_) {
        if (!m.empty()) return std::make_pair(m, c);
    }
    return std::nullopt;
}

TruncatedSeries magnusExpand(const FreeWord& word, unsigned maxDegree)
{
    TruncatedSeries s(maxDegree);
    for (const Letter& l : word.letters()) s.multiplyLetter(l);
    return s;
}

int magnusSignReference(const FreeWord& word, MonomialScan scan)
{
    const auto series = magnusExpand(word, static_cast<unsigned>(word.size()));
    const auto lead = series.leadingTerm(scan);
    if (!lead) throw FirstCoefficientMissing("no leading Magnus coefficient for " + word.toString({}));
    return lead->second > 0 ? 1 : -1;
}

namespace {

struct Overflow
{};

/**
 * Dense truncated series over k generators. Monomials of degree d occupy
 * [offset(d), offset(d) + k^d); inside a degree the index is the base-k
 * value of the monomial, so index order is deg-lex order.
 */
class DenseSeries
{
public:
    DenseSeries(std::size_t k, unsigned degree) : k_(k), degree_(degree)
    {
        offsets_.push_back(0);
        std::size_t width = 1;
        for (unsigned d = 0; d <= degree; ++d) {
            offsets_.push_back(offsets_.back() + width);
            width *= k;
        }
        coeffs_.assign(offsets_.back(), 0);
        coeffs_[0] = 1;
    }

    static bool fits(std::size_t k, unsigned degree, std::size_t limit)
    {
        std::size_t total = 0, width = 1;
        for (unsigned d = 0; d <= degree; ++d) {
            total += width;
            if (total > limit) return false;
            if (d < degree && width > limit / k) return false;
            width *= k;
        }
        return true;
    }

    void multiply(const Letter& l)
    {
        const std::size_t g = l.gen;
        if (l.exp > 0) {
            // S * (1 + g): read degree d, write degree d+1, top down
            for (unsigned d = degree_; d-- > 0;) {
                const std::size_t width = offsets_[d + 1] - offsets_[d];
                for (std::size_t v = 0; v < width; ++v) {
                    std::int64_t& dst = coeffs_[offsets_[d + 1] + v * k_ + g];
                    if (__builtin_add_overflow(dst, coeffs_[offsets_[d] + v], &dst)) throw Overflow{};
                }
            }
        } else {
            // T * (1 + g) = S, solved bottom up
            for (unsigned d = 1; d <= degree_; ++d) {
                const std::size_t width = offsets_[d + 1] - offsets_[d];
                for (std::size_t v = g; v < width; v += k_) {
                    std::int64_t& dst = coeffs_[offsets_[d] + v];
                    if (__builtin_sub_overflow(dst, coeffs_[offsets_[d - 1] + v / k_], &dst)) throw Overflow{};
                }
            }
        }
    }

    /** Sign of the first nonzero coefficient of exact degree d, 0 if none. */
    int signAtDegree(unsigned d) const
    {
        for (std::size_t i = offsets_[d]; i < offsets_[d + 1]; ++i) {
            if (coeffs_[i] != 0) return coeffs_[i] > 0 ? 1 : -1;
        }
        return 0;
    }

private:
    std::size_t k_;
    unsigned degree_;
    std::vector<std::size_t> offsets_;
    std::vector<std::int64_t> coeffs_;
};

constexpr std::size_t kDenseLimit = std::size_t{1} << 22;

}

int magnusSign(const FreeWord& word, std::size_t generatorCount)
{
    if (word.isIdentity()) throw std::invalid_argument("magnusSign of the identity");
    const std::size_t k = std::max<std::size_t>(generatorCount, 1);
    const auto top = static_cast<unsigned>(word.size());
    // coefficients of degree <= D do not depend on where the product is truncated above D
    for (unsigned degree = 1; degree <= top; ++degree) {
        if (!DenseSeries::fits(k, degree, kDenseLimit)) break;
        try {
            DenseSeries s(k, degree);
            for (const Letter& l : word.letters()) s.multiply(l);
            if (int sign = s.signAtDegree(degree)) return sign;
        } catch (const Overflow&) {
            break;
        }
    }
    return magnusSignReference(word, MonomialScan::DegLex);
}

}
