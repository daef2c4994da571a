/*
   Copyright 2026 The lsknot Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LSKNOT_JSON_IO_HPP
#define LSKNOT_JSON_IO_HPP

#include <cstdint>
#include <limits>

#include <json.hpp>

#include "lsknot/knotsum.hpp"
#include "lsknot/laurent.hpp"
#include "lsknot/obstruct.hpp"

namespace lsknot {

/// Integers stay JSON numbers while they fit in int64, and degrade to
/// decimal strings beyond that, so arbitrary-precision values survive
/// serialization without silent rounding.
inline nlohmann::ordered_json json_integer(const Integer& n) {
    if (n >= std::numeric_limits<std::int64_t>::min() &&
        n <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(n);
    return n.str();
}

inline nlohmann::ordered_json reason_to_json(const Reason& r) {
    nlohmann::ordered_json j;
    j["code"] = to_string(r.code);
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.params) params[key] = value;
    j["params"] = std::move(params);
    return j;
}

inline nlohmann::ordered_json verdict_to_json(const Verdict& v, const KnotSum& k) {
    nlohmann::ordered_json j;
    j["input"] = to_string(k);
    j["status"] = to_string(v.status);
    nlohmann::ordered_json reasons = nlohmann::ordered_json::array();
    for (const auto& r : v.reasons) reasons.push_back(reason_to_json(r));
    j["reasons"] = std::move(reasons);
    if (v.witness) j["witness"] = *v.witness;
    if (v.candidate_alexander) j["candidate_alexander"] = to_string(*v.candidate_alexander);
    if (v.candidate_determinant) j["candidate_determinant"] = json_integer(*v.candidate_determinant);
    return j;
}

} // namespace lsknot

#endif // LSKNOT_JSON_IO_HPP
