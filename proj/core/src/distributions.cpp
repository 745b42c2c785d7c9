#include "prax/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace prax {

namespace {

constexpr double kZetaDefaultTol = 1e-12;
constexpr std::int64_t kZetaMaxTerms = std::int64_t{1} << 25;

double integral_remainder(double t, double n_terms) {
    return 1.0 / ((t - 1.0) * std::pow(n_terms, t - 1.0));
}

// 1/n^t, with a multiply-only path for small integer exponents (the
// partial sums can run to ~1e8 terms, where std::pow dominates).
double inv_pow(double n, double t, int int_t) {
    if (int_t > 0) {
        double p = n;
        for (int i = 1; i < int_t; ++i) p *= n;
        return 1.0 / p;
    }
    return std::pow(n, -t);
}

ZetaValue zeta_uncached(double t, double tol) {
    // Smallest N with 1/((t-1) N^(t-1)) <= tol.
    double n_real = std::pow(1.0 / ((t - 1.0) * tol), 1.0 / (t - 1.0));
    std::int64_t n_terms = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(n_real)));
    while (integral_remainder(t, static_cast<double>(n_terms)) > tol) ++n_terms;
    if (n_terms > (std::int64_t{1} << 31))
        throw ResourceLimitError("zeta partial sum would need " + std::to_string(n_terms) +
                                 " terms; loosen the tolerance");
    const double rounded = std::round(t);
    const int int_t = (t == rounded && rounded >= 1 && rounded <= 8)
                          ? static_cast<int>(rounded)
                          : 0;
    // Ascending term size keeps the summation error at a few ulps.
    double sum = 0.0;
    for (std::int64_t n = n_terms; n >= 1; --n)
        sum += inv_pow(static_cast<double>(n), t, int_t);
    return ZetaValue{t, sum, integral_remainder(t, static_cast<double>(n_terms))};
}

// Tolerance for internal zeta uses: as tight as 1e-12 but never more than
// ~2^25 summed terms, so Dirichlet families with small exponents stay
// usable; the certified error bound is carried along either way.
ZetaValue zeta_internal(double t) {
    double cap_bound = integral_remainder(t, static_cast<double>(kZetaMaxTerms));
    return zeta(t, std::max(kZetaDefaultTol, 1.1 * cap_bound));
}

} // namespace

ZetaValue zeta(double t, double tol) {
    if (!(t > 1.0)) throw InputError("zeta exponent must be > 1");
    if (!(tol > 0.0)) throw InputError("zeta tolerance must be positive");
    static std::mutex mutex;
    static std::map<std::pair<double, double>, ZetaValue> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find({t, tol});
        if (it != cache.end()) return it->second;
    }
    ZetaValue v = zeta_uncached(t, tol);
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(std::pair{t, tol}, v);
    return v;
}

LengthDistribution LengthDistribution::uniform(std::int64_t m) {
    if (m < 1) throw InputError("uniform length distribution needs M >= 1");
    LengthDistribution L;
    L.family_ = Family::Uniform;
    L.m_ = m;
    return L;
}

LengthDistribution LengthDistribution::lambert(double base, std::int64_t displacement) {
    if (!(base > 1.0)) throw InputError("Lambert base must be > 1");
    if (displacement < 0) throw InputError("displacement must be >= 0");
    LengthDistribution L;
    L.family_ = Family::Lambert;
    L.base_ = base;
    L.displacement_ = displacement;
    return L;
}

LengthDistribution LengthDistribution::dirichlet(double t, std::int64_t displacement) {
    if (!(t > 1.0)) throw InputError("Dirichlet exponent must be > 1");
    if (displacement < 0) throw InputError("displacement must be >= 0");
    LengthDistribution L;
    L.family_ = Family::Dirichlet;
    L.t_ = t;
    L.displacement_ = displacement;
    return L;
}

std::string LengthDistribution::descriptor() const {
    std::ostringstream out;
    switch (family_) {
        case Family::Uniform:
            out << "uniform:M=" << m_;
            break;
        case Family::Lambert:
            out << "lambert:base=" << base_ << ",d=" << displacement_;
            break;
        case Family::Dirichlet:
            out << "dirichlet:t=" << t_ << ",d=" << displacement_;
            break;
    }
    return out.str();
}

double length_mass(const LengthDistribution& L, std::int64_t n) {
    if (n < 0) return 0.0;
    switch (L.family()) {
        case LengthDistribution::Family::Uniform:
            return n < L.uniform_span() ? 1.0 / static_cast<double>(L.uniform_span()) : 0.0;
        case LengthDistribution::Family::Lambert: {
            if (n < L.displacement()) return 0.0;
            const double z = 1.0 / L.lambert_base();
            return (1.0 - z) * std::pow(z, static_cast<double>(n - L.displacement()));
        }
        case LengthDistribution::Family::Dirichlet: {
            if (n < L.displacement()) return 0.0;
            const double t = L.dirichlet_exponent();
            const double k = static_cast<double>(n + 1 - L.displacement());
            return std::pow(k, -t) / zeta_internal(t).value;
        }
    }
    return 0.0;
}

double length_tail(const LengthDistribution& L, std::int64_t n) {
    if (n < 0) return 1.0;
    switch (L.family()) {
        case LengthDistribution::Family::Uniform: {
            const std::int64_t m = L.uniform_span();
            return n >= m - 1 ? 0.0 : static_cast<double>(m - 1 - n) / static_cast<double>(m);
        }
        case LengthDistribution::Family::Lambert: {
            if (n < L.displacement()) return 1.0;
            const double z = 1.0 / L.lambert_base();
            return std::pow(z, static_cast<double>(n + 1 - L.displacement()));
        }
        case LengthDistribution::Family::Dirichlet: {
            if (n < L.displacement()) return 1.0;
            const double t = L.dirichlet_exponent();
            const std::int64_t terms = n + 1 - L.displacement();
            const double rounded = std::round(t);
            const int int_t =
                (t == rounded && rounded >= 1 && rounded <= 8) ? static_cast<int>(rounded) : 0;
            double sum = 0.0;
            for (std::int64_t i = terms; i >= 1; --i)
                sum += inv_pow(static_cast<double>(i), t, int_t);
            return 1.0 - sum / zeta_internal(t).value;
        }
    }
    return 0.0;
}

double expected_length(const LengthDistribution& L) {
    switch (L.family()) {
        case LengthDistribution::Family::Uniform:
            return static_cast<double>(L.uniform_span() - 1) / 2.0;
        case LengthDistribution::Family::Lambert:
            return static_cast<double>(L.displacement()) + 1.0 / (L.lambert_base() - 1.0);
        case LengthDistribution::Family::Dirichlet: {
            const double t = L.dirichlet_exponent();
            if (!(t > 2.0))
                throw InfiniteExpectationError(
                    "Dirichlet expectation diverges for t <= 2 (t = " + std::to_string(t) + ")");
            return static_cast<double>(L.displacement()) +
                   zeta_internal(t - 1.0).value / zeta_internal(t).value - 1.0;
        }
    }
    return 0.0;
}

std::int64_t maxlen(const LengthDistribution& L, double eps) {
    if (!(eps > 0.0) || !(eps < 1.0))
        throw InputError("maxlen tolerance must lie in (0,1)");
    switch (L.family()) {
        case LengthDistribution::Family::Uniform:
            return L.uniform_span() - 1;
        case LengthDistribution::Family::Lambert: {
            // Smallest k >= 1 with base^k >= 1/eps.
            const double inv_eps = 1.0 / eps;
            const double base = L.lambert_base();
            std::int64_t k =
                std::max<std::int64_t>(1, static_cast<std::int64_t>(
                                              std::floor(std::log(inv_eps) / std::log(base))) -
                                              2);
            while (std::pow(base, static_cast<double>(k)) < inv_eps) ++k;
            return std::max<std::int64_t>(0, k + L.displacement() - 1);
        }
        case LengthDistribution::Family::Dirichlet: {
            // Smallest k >= 1 with k^(t-1) >= 1/eps.
            const double inv_eps = 1.0 / eps;
            const double tm1 = L.dirichlet_exponent() - 1.0;
            std::int64_t k = std::max<std::int64_t>(
                1, static_cast<std::int64_t>(std::floor(std::pow(inv_eps, 1.0 / tm1))) - 2);
            while (std::pow(static_cast<double>(k), tm1) < inv_eps) ++k;
            return std::max<std::int64_t>(0, k + L.displacement() - 1);
        }
    }
    return 0;
}

double probd(const LengthDistribution& L, std::int64_t m) { return length_mass(L, m); }

WordDistribution WordDistribution::length_based(LengthDistribution length,
                                                Symbol alphabet_size) {
    if (alphabet_size < 1) throw InputError("alphabet size must be at least 1");
    WordDistribution W;
    W.alphabet_size_ = alphabet_size;
    W.length_ = std::move(length);
    return W;
}

WordDistribution WordDistribution::uniform_finite(AdfaCertificate acceptor,
                                                  BigInt total_count) {
    if (total_count < 1)
        throw EmptyLanguageError("uniform distribution over an empty language");
    WordDistribution W;
    W.alphabet_size_ = acceptor.dfa.alphabet_size();
    W.acceptor_ = std::move(acceptor);
    W.total_count_ = std::move(total_count);
    return W;
}

const LengthDistribution& WordDistribution::length_distribution() const {
    if (!length_) throw InputError("word distribution is not length-based");
    return *length_;
}

const AdfaCertificate& WordDistribution::acceptor() const {
    if (!acceptor_) throw InputError("word distribution has no finite acceptor");
    return *acceptor_;
}

double WordDistribution::word_prob(const Word& w) const {
    for (Symbol c : w)
        if (c >= alphabet_size_)
            throw InputError("word symbol outside the distribution's alphabet");
    if (length_) {
        const auto n = static_cast<std::int64_t>(w.size());
        return length_mass(*length_, n) *
               std::pow(static_cast<double>(alphabet_size_), -static_cast<double>(n));
    }
    if (!membership(acceptor_->dfa, w)) return 0.0;
    return 1.0 / total_count_.convert_to<double>();
}

double word_prob(const WordDistribution& W, const Word& w) { return W.word_prob(w); }

AugmentedDistribution augment(const WordDistribution& W, std::int64_t M) {
    if (!W.is_length_based())
        throw InputError("augmented distributions need a length-based word distribution");
    if (M < 0) throw InputError("cutoff must be >= 0");
    const LengthDistribution& L = W.length_distribution();
    AugmentedDistribution out;
    out.length_mass.resize(static_cast<std::size_t>(M) + 1);
    double sum = 0.0;
    for (std::int64_t n = 0; n <= M; ++n) {
        double p = length_mass(L, n);
        out.length_mass[static_cast<std::size_t>(n)] = p;
        sum += p;
    }
    out.none_mass = length_tail(L, M);
    if (std::abs(sum + out.none_mass - 1.0) > 1e-12)
        throw Error("augmented outcome table does not sum to 1");
    return out;
}

LengthDistribution parse_length_distribution(const std::string& descriptor) {
    auto colon = descriptor.find(':');
    const std::string family = descriptor.substr(0, colon);
    std::map<std::string, std::string> fields;
    if (colon != std::string::npos) {
        std::string rest = descriptor.substr(colon + 1);
        std::istringstream in(rest);
        std::string item;
        while (std::getline(in, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0)
                throw InputError("distribution descriptor field '" + item +
                                 "' is not of the form key=value");
            fields[item.substr(0, eq)] = item.substr(eq + 1);
        }
    }
    auto take = [&](const char* key) {
        auto it = fields.find(key);
        if (it == fields.end())
            throw InputError("distribution descriptor is missing field '" +
                             std::string(key) + "'");
        std::string v = it->second;
        fields.erase(it);
        return v;
    };
    auto as_int = [](const std::string& v, const char* key) {
        try {
            std::size_t used = 0;
            long long x = std::stoll(v, &used);
            if (used != v.size()) throw std::invalid_argument("");
            return x;
        } catch (const std::exception&) {
            throw InputError("field '" + std::string(key) + "' is not an integer: '" + v + "'");
        }
    };
    auto as_real = [](const std::string& v, const char* key) {
        try {
            std::size_t used = 0;
            double x = std::stod(v, &used);
            if (used != v.size()) throw std::invalid_argument("");
            return x;
        } catch (const std::exception&) {
            throw InputError("field '" + std::string(key) + "' is not a number: '" + v + "'");
        }
    };
    LengthDistribution out = LengthDistribution::uniform(1);
    if (family == "uniform") {
        out = LengthDistribution::uniform(as_int(take("M"), "M"));
    } else if (family == "lambert") {
        double base = as_real(take("base"), "base");
        std::int64_t d = as_int(take("d"), "d");
        out = LengthDistribution::lambert(base, d);
    } else if (family == "dirichlet") {
        double t = as_real(take("t"), "t");
        std::int64_t d = as_int(take("d"), "d");
        out = LengthDistribution::dirichlet(t, d);
    } else {
        throw InputError("unknown distribution family '" + family +
                         "' (expected uniform, lambert or dirichlet)");
    }
    if (!fields.empty())
        throw InputError("unexpected field '" + fields.begin()->first +
                         "' in distribution descriptor");
    return out;
}

} // namespace prax
