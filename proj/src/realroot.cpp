#include "lagroot/realroot.hpp"

#include <stdexcept>

namespace lagroot {

SturmChain::SturmChain(const Polynomial& p) {
    if (p.is_constant()) throw std::domain_error("Sturm chain requires degree >= 1");
    seq_.push_back(p);
    seq_.push_back(derivative(p));
    while (true) {
        Polynomial next = -rem(seq_[seq_.size() - 2], seq_.back());
        if (next.is_zero()) break;
        seq_.push_back(std::move(next));
    }
}

SturmChain sturm_chain(const Polynomial& p) { return SturmChain(p); }

Interval::Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (!(lo < hi)) throw std::invalid_argument("interval requires lo < hi, got [" + lo.to_string() + ", " +
                                                hi.to_string() + "]");
}

namespace {

template <class Signs>
std::size_t count_variations(const Signs& signs) {
    std::size_t changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

std::size_t sturm_count(const SturmChain& chain, const Rational& lo, const Rational& hi) {
    return sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
}

// Shrinks a radius around a root x of the (square-free) chain head until
// (x - eps, x + eps) has non-root endpoints and isolates exactly that root.
Rational isolating_radius(const SturmChain& chain, const Rational& x, Rational eps) {
    const Polynomial& p = chain.front();
    while (true) {
        const Rational a = x - eps;
        const Rational b = x + eps;
        if (!eval(p, a).is_zero() && !eval(p, b).is_zero() && sturm_count(chain, a, b) == 1) return eps;
        eps /= Rational(2);
    }
}

void bisect(const SturmChain& chain, const Rational& lo, const Rational& hi, std::size_t count,
            std::vector<Interval>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.emplace_back(lo, hi);
        return;
    }
    const Rational mid = (lo + hi) / Rational(2);
    if (eval(chain.front(), mid).is_zero()) {
        const Rational eps = isolating_radius(chain, mid, (hi - lo) / Rational(4));
        const Rational left_hi = mid - eps;
        const Rational right_lo = mid + eps;
        bisect(chain, lo, left_hi, sturm_count(chain, lo, left_hi), out);
        out.emplace_back(left_hi, right_lo);
        bisect(chain, right_lo, hi, sturm_count(chain, right_lo, hi), out);
        return;
    }
    bisect(chain, lo, mid, sturm_count(chain, lo, mid), out);
    bisect(chain, mid, hi, sturm_count(chain, mid, hi), out);
}

}  // namespace

std::size_t sign_variations_at(const SturmChain& chain, const Rational& x) {
    if (eval(chain.front(), x).is_zero())
        throw std::domain_error("Sturm sequence evaluated at a root (" + x.to_string() + ")");
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain.seq()) signs.push_back(eval(q, x).sign());
    return count_variations(signs);
}

std::size_t sign_variations_at_infinity(const SturmChain& chain, Infinity side) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain.seq()) {
        int s = q.leading().sign();
        if (side == Infinity::negative && *q.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return count_variations(signs);
}

std::size_t count_real_roots(const Polynomial& p) {
    const SturmChain chain(squarefree_part(p));
    return sign_variations_at_infinity(chain, Infinity::negative) -
           sign_variations_at_infinity(chain, Infinity::positive);
}

std::size_t count_real_roots(const Polynomial& p, const Interval& window) {
    const SturmChain chain(squarefree_part(p));
    const Polynomial& sf = chain.front();
    Rational lo = window.lo;
    Rational hi = window.hi;
    if (eval(sf, lo).is_zero()) lo -= isolating_radius(chain, lo, Rational(1));
    if (eval(sf, hi).is_zero()) hi += isolating_radius(chain, hi, Rational(1));
    return sturm_count(chain, lo, hi);
}

Rational root_bound(const Polynomial& p) {
    if (p.is_constant()) throw std::domain_error("root bound requires degree >= 1");
    const Rational lead = p.leading().abs();
    Rational largest;
    const auto coeffs = p.coeffs();
    for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
        const Rational a = coeffs[i].abs();
        if (a > largest) largest = a;
    }
    return Rational(1) + largest / lead;
}

std::vector<Interval> isolate_roots(const Polynomial& p) {
    const SturmChain chain(squarefree_part(p));
    const Rational bound = root_bound(chain.front());
    std::vector<Interval> out;
    bisect(chain, -bound, bound, sturm_count(chain, -bound, bound), out);
    return out;
}

RootCertificate certify_real_rooted(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("real-rootedness undefined for 0");
    RootCertificate cert;
    cert.degree = *p.degree();
    if (cert.degree == 0) {
        cert.is_real_rooted = true;
        return cert;
    }
    const Polynomial sf = squarefree_part(p);
    cert.squarefree_degree = *sf.degree();
    cert.distinct_real_roots = count_real_roots(sf);
    cert.is_real_rooted = cert.distinct_real_roots == cert.squarefree_degree;
    cert.isolating_intervals = isolate_roots(sf);
    return cert;
}

std::optional<std::string> check_certificate(const Polynomial& p, const RootCertificate& cert) {
    if (p.is_zero()) return "certificate for the zero polynomial";
    if (cert.degree != *p.degree()) return "degree mismatch";
    if (cert.is_real_rooted != (cert.distinct_real_roots == cert.squarefree_degree))
        return "real_rooted flag disagrees with root counts";
    if (cert.isolating_intervals.size() != cert.distinct_real_roots)
        return "interval count " + std::to_string(cert.isolating_intervals.size()) + " != distinct_real_roots " +
               std::to_string(cert.distinct_real_roots);
    if (cert.degree == 0) {
        if (cert.squarefree_degree != 0 || cert.distinct_real_roots != 0) return "constant with nonzero root counts";
        return std::nullopt;
    }

    const Polynomial sf = squarefree_part(p);
    if (cert.squarefree_degree != *sf.degree()) return "squarefree_degree mismatch";
    const SturmChain chain(sf);
    for (std::size_t i = 0; i < cert.isolating_intervals.size(); ++i) {
        const Interval& iv = cert.isolating_intervals[i];
        if (!(iv.lo < iv.hi)) return "empty interval at index " + std::to_string(i);
        if (eval(sf, iv.lo).is_zero() || eval(sf, iv.hi).is_zero())
            return "interval endpoint is a root at index " + std::to_string(i);
        if (sturm_count(chain, iv.lo, iv.hi) != 1) return "interval " + std::to_string(i) + " is not isolating";
        // Pairwise disjointness; sorted order is not assumed.
        for (std::size_t j = 0; j < i; ++j) {
            const Interval& other = cert.isolating_intervals[j];
            if (iv.lo < other.hi && other.lo < iv.hi)
                return "intervals " + std::to_string(j) + " and " + std::to_string(i) + " overlap";
        }
    }
    if (count_real_roots(sf) != cert.distinct_real_roots) return "distinct_real_roots mismatch";
    return std::nullopt;
}

}  // namespace lagroot
