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

#include "etog/order_axioms.hpp"

#include <stdexcept>

namespace etog {

ElementSampler::ElementSampler(GroupSpec spec, std::uint64_t seed, std::size_t maxWordLen, std::int64_t range)
    : spec_(std::move(spec)), rng_(seed), maxWordLen_(maxWordLen), range_(range)
{
}

GroupElement ElementSampler::operator()()
{
    return sample(spec_);
}

GroupElement ElementSampler::sample(const GroupSpec& spec)
{
    std::uniform_int_distribution<std::int64_t> coord(-range_, range_);
    switch (spec.kind()) {
    case GroupSpec::Kind::Int:
        return coord(rng_);
    case GroupSpec::Kind::LexVec: {
        // small entries so that ties in leading coordinates are frequent
        std::uniform_int_distribution<std::int64_t> small(-2, 2);
        GroupElement::Vec v(spec.dimension());
        for (auto& c : v) c = small(rng_);
        return v;
    }
    case GroupSpec::Kind::Free: {
        std::uniform_int_distribution<std::size_t> len(0, maxWordLen_);
        std::uniform_int_distribution<std::uint32_t> gen(0, static_cast<std::uint32_t>(spec.generators().size() - 1));
        std::bernoulli_distribution neg(0.5);
        std::vector<Letter> letters(len(rng_));
        for (auto& l : letters) l = Letter{gen(rng_), static_cast<std::int8_t>(neg(rng_) ? -1 : 1)};
        return reduce(letters);
    }
    case GroupSpec::Kind::Inverse:
        return sample(spec.inner());
    case GroupSpec::Kind::Product: {
        GroupElement a = sample(spec.left());
        GroupElement b = sample(spec.right());
        return GroupElement::pair(std::move(a), std::move(b));
    }
    }
    throw std::logic_error("unhandled spec kind");
}

OrderAxiomReport checkOrderAxioms(const GroupSpec& spec, std::size_t samples, std::uint64_t seed, std::size_t maxWordLen)
{
    ElementSampler next(spec, seed, maxWordLen);
    const GroupElement e = identity(spec);
    OrderAxiomReport report;
    auto fmt = [&](const GroupElement& x) { return "'" + formatElement(spec, x) + "'"; };
    auto fail = [&](std::string law, std::string text) {
        report.pass = false;
        report.failedLaw = std::move(law);
        report.counterexample = std::move(text);
    };

    for (std::size_t n = 0; n < samples && report.pass; ++n) {
        ++report.samples;
        const GroupElement x = next(), y = next(), z = next(), g = next(), h = next();

        const auto xy = compare(spec, x, y);
        const bool equalIff = (xy == 0) == isIdentity(spec, compose(spec, x, invert(spec, y)));
        if (!equalIff || compare(spec, y, x) != (0 <=> xy)) {
            fail("totality", "x=" + fmt(x) + " y=" + fmt(y));
            break;
        }

        const auto yz = compare(spec, y, z);
        const auto xz = compare(spec, x, z);
        if (xy <= 0 && yz <= 0 && !(xz <= 0)) {
            fail("transitivity", "x=" + fmt(x) + " y=" + fmt(y) + " z=" + fmt(z));
            break;
        }

        const GroupElement& a = xy <= 0 ? x : y;
        const GroupElement& b = xy <= 0 ? y : x;
        const auto shifted = compare(spec, compose(spec, compose(spec, g, a), h), compose(spec, compose(spec, g, b), h));
        if (!(shifted <= 0)) {
            fail("bi-invariance", "a=" + fmt(a) + " b=" + fmt(b) + " x=" + fmt(g) + " y=" + fmt(h));
            break;
        }

        const bool xPos = compare(spec, x, e) > 0, yPos = compare(spec, y, e) > 0;
        if (xPos && yPos && !(compare(spec, compose(spec, x, y), e) > 0)) {
            fail("cone-product", "x=" + fmt(x) + " y=" + fmt(y));
            break;
        }
        const GroupElement& p = xPos ? x : invert(spec, x);
        if (!isIdentity(spec, p) && compare(spec, compose(spec, compose(spec, g, p), invert(spec, g)), e) <= 0) {
            fail("cone-conjugation", "x=" + fmt(p) + " g=" + fmt(g));
            break;
        }
    }
    return report;
}

}
