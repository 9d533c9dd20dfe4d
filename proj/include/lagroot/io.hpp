#ifndef LAGROOT_IO_HPP
#define LAGROOT_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "lagroot/polynomial.hpp"
#include "lagroot/realroot.hpp"

namespace lagroot {

using Json = nlohmann::ordered_json;

/// Compact rendering with ", " and ": " separators, keys in insertion order.
/// This is the byte layout of every JSON document the tool emits.
std::string dump_json(const Json& value);

/// {"coeffs": ["a0", "a1", ...]}
Json polynomial_to_json(const Polynomial& p);
std::string format_polynomial(const Polynomial& p);

/// Parses {"coeffs": [...]}; coefficients are rational strings. Trailing
/// zero coefficients are dropped. Throws ParseError.
Polynomial parse_polynomial(std::string_view text);
Polynomial polynomial_from_json(const Json& value);

Json interval_to_json(const Interval& iv);
Json certificate_to_json(const RootCertificate& cert);
std::string format_certificate(const RootCertificate& cert);

}  // namespace lagroot

#endif
