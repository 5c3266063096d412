// Copyright 2026 The pinstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PINSTAB_ERRORS_H
#define PINSTAB_ERRORS_H

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pinstab {

/// A requested computation exceeds a size cap or memory budget.
class InfeasibleError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Raised by propagation when the live term count would exceed the budget.
/// `required_terms` is the 2^t_count upper bound for the circuit.
class BudgetExceededError : public InfeasibleError {
   public:
    BudgetExceededError(const std::string &what, std::uint64_t required_terms)
        : InfeasibleError(what), required_terms(required_terms) {}
    std::uint64_t required_terms;
};

/// An estimate cannot be formed (e.g. the mean |OTOC| collapsed to zero).
class EstimationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace pinstab

#endif
