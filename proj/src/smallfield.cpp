#include "asqf/smallfield.hpp"

#include "asqf/fqpoly.hpp"

namespace asqf {

namespace {

constexpr uint32_t kMaxQ = 1024;

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void finish_tables(SmallField& F) {
    F.inv_t.assign(F.q, 0);
    for (uint32_t a = 1; a < F.q; ++a) {
        for (uint32_t b = 1; b < F.q; ++b) {
            if (F.mul(uint16_t(a), uint16_t(b)) == 1) {
                F.inv_t[a] = uint16_t(b);
                break;
            }
        }
        if (F.inv_t[a] == 0)
            throw Error(ErrorKind::InternalCheckFailed, "field tables: missing inverse");
    }
    if (F.q > SmallField::kEtaCacheThreshold) {
        F.eta_t.assign(F.q, -1);
        F.eta_t[0] = 0;
        for (uint32_t a = 1; a < F.q; ++a) F.eta_t[F.mul(uint16_t(a), uint16_t(a))] = 1;
    }
}

} // namespace

SmallField make_prime_smallfield(uint32_t p) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, "p = " + std::to_string(p));
    if (p == 2) throw Error(ErrorKind::EvenCharacteristic, "characteristic 2 is not supported");
    if (p > kMaxQ) throw Error(ErrorKind::BudgetExceeded, "characteristic too large for tables");
    SmallField F;
    F.p = p;
    F.s = 1;
    F.q = p;
    F.add_t.resize(size_t(p) * p);
    F.mul_t.resize(size_t(p) * p);
    F.neg_t.resize(p);
    for (uint32_t a = 0; a < p; ++a) {
        F.neg_t[a] = uint16_t((p - a) % p);
        for (uint32_t b = 0; b < p; ++b) {
            F.add_t[size_t(a) * p + b] = uint16_t((a + b) % p);
            F.mul_t[size_t(a) * p + b] = uint16_t((a * b) % p);
        }
    }
    finish_tables(F);
    return F;
}

SmallField make_extension_smallfield(const SmallField& fp, const std::vector<uint16_t>& modulus) {
    uint32_t s = modulus.empty() ? 0 : uint32_t(modulus.size() - 1);
    if (s < 2) throw Error(ErrorKind::DegreeMismatch, "extension modulus must have degree >= 2");
    if (modulus.back() != 1)
        throw Error(ErrorKind::InvalidInput, "extension modulus must be monic");
    for (uint16_t c : modulus)
        if (c >= fp.q) throw Error(ErrorKind::InvalidInput, "modulus coefficient out of range");
    fqp::Poly m(modulus.begin(), modulus.end());
    if (!fqp::is_irreducible(fp, m))
        throw Error(ErrorKind::ReducibleModulus, "extension modulus is reducible");

    uint64_t q64 = 1;
    for (uint32_t i = 0; i < s; ++i) q64 *= fp.p;
    if (q64 > kMaxQ) throw Error(ErrorKind::BudgetExceeded, "q too large for tables");
    uint32_t q = uint32_t(q64);

    // Index <-> digit vector: index = sum c_i p^i, low digit first.
    auto digits = [&](uint32_t idx) {
        fqp::Poly d(s, 0);
        for (uint32_t i = 0; i < s; ++i) {
            d[i] = uint16_t(idx % fp.p);
            idx /= fp.p;
        }
        fqp::normalize(d);
        return d;
    };
    auto index_of = [&](const fqp::Poly& d) {
        uint32_t idx = 0;
        for (size_t i = d.size(); i-- > 0;) idx = idx * fp.p + d[i];
        return uint16_t(idx);
    };

    SmallField F;
    F.p = fp.p;
    F.s = s;
    F.q = q;
    F.modulus = modulus;
    F.add_t.resize(size_t(q) * q);
    F.mul_t.resize(size_t(q) * q);
    F.neg_t.resize(q);
    for (uint32_t a = 0; a < q; ++a) {
        fqp::Poly da = digits(a);
        F.neg_t[a] = index_of(fqp::neg(fp, da));
        for (uint32_t b = 0; b < q; ++b) {
            fqp::Poly db = digits(b);
            F.add_t[size_t(a) * q + b] = index_of(fqp::add(fp, da, db));
            F.mul_t[size_t(a) * q + b] = index_of(fqp::mod(fp, fqp::mul(fp, da, db), m));
        }
    }
    finish_tables(F);
    return F;
}

} // namespace asqf
