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

#ifndef ETOG_ORDER_AXIOMS_HPP
#define ETOG_ORDER_AXIOMS_HPP

#include <cstdint>
#include <random>
#include <string>

#include "etog/ordered_group.hpp"

namespace etog {

/**
 * Random elements of a spec. Int in [-range, range], vectors entrywise in
 * [-range, range], free words reduced from up to maxWordLen random letters.
 */
class ElementSampler
{
public:
    ElementSampler(GroupSpec spec, std::uint64_t seed, std::size_t maxWordLen = 6, std::int64_t range = 20);

    GroupElement operator()();
    GroupElement sample(const GroupSpec& spec);

private:
    GroupSpec spec_;
    std::mt19937_64 rng_;
    std::size_t maxWordLen_;
    std::int64_t range_;
};

struct OrderAxiomReport
{
    bool pass = true;
    std::size_t samples = 0;
    std::string failedLaw;       // "totality", "transitivity", "bi-invariance", "cone-product", "cone-conjugation"
    std::string counterexample;
};

/**
 * On `samples` random tuples checks: compare is antisymmetric and Equal
 * exactly when x y^-1 is the identity; transitivity; a <= b implies
 * x a y <= x b y; the positive cone is closed under products and under
 * conjugation. Stops at the first failure.
 */
OrderAxiomReport checkOrderAxioms(const GroupSpec& spec, std::size_t samples, std::uint64_t seed,
                                  std::size_t maxWordLen = 6);

}

#endif
