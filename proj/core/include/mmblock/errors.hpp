// SPDX-License-Identifier: Apache-2.0
//
// mmblock: line-of-sight blockage analysis and simulation for mmWave networks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef MMBLOCK_ERRORS_HPP
#define MMBLOCK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mmblock {

// A model parameter is outside its physical domain (negative density, inverted heights, ...).
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A metric conditioned on coverage was requested where coverage is impossible.
class UndefinedConditional : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A numerical routine failed to converge or hit a singular system.
class SolverFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// No base-station density can meet the requested blockage target.
class InfeasibleTarget : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed configuration text or flags. `key()` names the offending entry when known.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string &what)
        : std::runtime_error(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}

    const std::string &key() const noexcept { return key_; }

private:
    std::string key_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mmblock

#endif
