#include "lagroot/io.hpp"

#include "lagroot/errors.hpp"

namespace lagroot {

namespace {

void dump_into(const Json& value, std::string& out) {
    switch (value.type()) {
        case Json::value_t::object: {
            out += '{';
            bool first = true;
            for (const auto& [key, item] : value.items()) {
                if (!first) out += ", ";
                first = false;
                out += Json(key).dump();
                out += ": ";
                dump_into(item, out);
            }
            out += '}';
            break;
        }
        case Json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& item : value) {
                if (!first) out += ", ";
                first = false;
                dump_into(item, out);
            }
            out += ']';
            break;
        }
        default:
            out += value.dump();
    }
}

}  // namespace

std::string dump_json(const Json& value) {
    std::string out;
    dump_into(value, out);
    return out;
}

Json polynomial_to_json(const Polynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.to_string());
    return Json{{"coeffs", std::move(coeffs)}};
}

std::string format_polynomial(const Polynomial& p) { return dump_json(polynomial_to_json(p)); }

Polynomial polynomial_from_json(const Json& value) {
    if (!value.is_object() || !value.contains("coeffs"))
        throw ParseError("polynomial JSON must be an object with a \"coeffs\" array");
    if (value.size() != 1) throw ParseError("polynomial JSON has unexpected keys besides \"coeffs\"");
    const Json& coeffs = value.at("coeffs");
    if (!coeffs.is_array()) throw ParseError("\"coeffs\" must be an array");
    std::vector<Rational> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        if (!c.is_string()) throw ParseError("coefficients must be strings such as \"3\" or \"-1/2\"");
        out.push_back(Rational::parse(c.get<std::string>()));
    }
    return Polynomial(std::move(out));
}

Polynomial parse_polynomial(std::string_view text) {
    Json value;
    try {
        value = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid polynomial JSON: ") + e.what());
    }
    return polynomial_from_json(value);
}

Json interval_to_json(const Interval& iv) { return Json::array({iv.lo.to_string(), iv.hi.to_string()}); }

Json certificate_to_json(const RootCertificate& cert) {
    Json intervals = Json::array();
    for (const auto& iv : cert.isolating_intervals) intervals.push_back(interval_to_json(iv));
    return Json{{"degree", cert.degree},
                {"squarefree_degree", cert.squarefree_degree},
                {"distinct_real_roots", cert.distinct_real_roots},
                {"real_rooted", cert.is_real_rooted},
                {"intervals", std::move(intervals)}};
}

std::string format_certificate(const RootCertificate& cert) { return dump_json(certificate_to_json(cert)); }

}  // namespace lagroot
