#include "levelalg/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace levelalg {

std::string family_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::F1: return "F1";
        case FamilyKind::F2: return "F2";
        case FamilyKind::G1: return "G1";
        case FamilyKind::G2: return "G2";
        case FamilyKind::G3: return "G3";
        case FamilyKind::H1: return "H1";
    }
    return "?";
}

std::optional<FamilyKind> parse_family(const std::string& name) {
    for (auto k : {FamilyKind::F1, FamilyKind::F2, FamilyKind::G1, FamilyKind::G2, FamilyKind::G3, FamilyKind::H1})
        if (family_name(k) == name) return k;
    return std::nullopt;
}

long long triangular_floor(long long n) {
    long long m = 0;
    while ((m + 2) * (m + 1) / 2 < n) ++m;
    return m;
}

bool is_triangular(long long n) {
    long long t = 0;
    for (long long k = 0; t < n; ++k) t = k * (k + 1) / 2;
    return t == n;
}

long long f2_min_i(long long a) {
    const long long rhs = 2 * a * a + 8 * a + 7;
    long long i = 0;
    while (true) {
        const long long t = 2 * i - 2 * a + 3;
        if (t >= 0 && t * t >= rhs) return i;
        ++i;
    }
}

namespace {

bool double_drop_kind(FamilyKind k) {
    return k == FamilyKind::F1 || k == FamilyKind::G1 || k == FamilyKind::H1;
}

// Constraints on the shape parameters a, b, c, i (everything except s).
std::vector<std::string> shape_violations(const FamilyParams& p) {
    std::vector<std::string> v;
    const long long a = p.a, b = p.b, c = p.c, i = p.i;
    switch (p.kind) {
        case FamilyKind::F1:
            if (a < 4) v.push_back("F1 needs a >= 4");
            if (i < 2 * a) v.push_back("F1 needs i >= 2a");
            break;
        case FamilyKind::F2:
            if (a % 2 == 0) v.push_back("F2 needs a odd");
            if (a < 7) v.push_back("F2 needs a >= 7");
            if (a >= 1 && i < f2_min_i(a)) v.push_back("F2 needs i >= " + std::to_string(a >= 1 ? f2_min_i(a) : 0));
            break;
        case FamilyKind::G1:
            if (a < 2 || b < a) v.push_back("G1 needs b >= a >= 2");
            if (i < a * b + 1) v.push_back("G1 needs i >= ab+1");
            break;
        case FamilyKind::G2:
            if (a < 2 || b < a) v.push_back("G2 needs b >= a >= 2");
            if ((a * b) % 2 != 0) v.push_back("G2 needs ab even");
            if (2 * i < a * b + 4) v.push_back("G2 needs i >= ab/2+2");
            break;
        case FamilyKind::G3: {
            if (a < 2 || b < a) v.push_back("G3 needs b >= a >= 2");
            if (is_triangular(a * b)) v.push_back("G3 needs ab not of the form C(N,2)");
            if (i < a + b - 3) v.push_back("G3 needs i >= a+b-3");
            if (a >= 1 && b >= 1 && i >= 0) {
                const long long m = triangular_floor(a * b);
                const __int128 lhs = static_cast<__int128>(a * b) * (2 * i - a - b + 4) / 2 + binomial(m + 3, 3);
                if (lhs > static_cast<__int128>(binomial(i + 3, 3)))
                    v.push_back("G3 needs ab(2i-a-b+4)/2 + C(m+3,3) <= C(i+3,3)");
            }
            break;
        }
        case FamilyKind::H1:
            if (a < 2 || b < a || c < b) v.push_back("H1 needs c >= b >= a >= 2");
            if (i < a * b * c) v.push_back("H1 needs i >= abc");
            break;
    }
    return v;
}

long long delta_of(const FamilyParams& p) {
    switch (p.kind) {
        case FamilyKind::F1:
        case FamilyKind::F2: return p.a;
        case FamilyKind::H1: return p.a * p.b * p.c;
        default: return p.a * p.b;
    }
}

}  // namespace

FamilyShape family_shape(const FamilyParams& p) {
    auto v = shape_violations(p);
    if (!v.empty()) throw std::invalid_argument(v.front());
    FamilyShape s;
    const int a = static_cast<int>(p.a), b = static_cast<int>(p.b), c = static_cast<int>(p.c);
    const int i = static_cast<int>(p.i);
    s.delta = delta_of(p);
    s.double_drop = double_drop_kind(p.kind);
    s.i_f = i + (s.double_drop ? 3 : 2);
    s.u = 1;
    switch (p.kind) {
        case FamilyKind::F1:
            s.r = 3;
            s.j = i + a;
            s.p_bounds = {a - 1};
            s.q_bounds = {s.j, s.j, s.j};
            break;
        case FamilyKind::F2:
            s.r = 3;
            s.j = i + (a - 1) / 2;
            s.p_bounds = {a - 1};
            s.q_bounds = {s.j, s.j, s.j};
            s.u = 2;
            break;
        case FamilyKind::G1:
            s.r = 4;
            s.j = i + a * b;
            s.p_bounds = {a - 1, b - 1};
            s.q_bounds = {s.j, s.j, s.j, 0};
            break;
        case FamilyKind::G2:
            s.r = 4;
            s.j = i + a * b / 2;
            s.p_bounds = {s.j, a - 1, b - 1};
            s.q_bounds = {1};
            break;
        case FamilyKind::G3:
            s.r = 4;
            s.j = i + static_cast<int>(triangular_floor(static_cast<long long>(a) * b));
            s.p_bounds = {a - 1, b - 1};
            s.q_bounds = {s.j, s.j, s.j, s.j};
            break;
        case FamilyKind::H1:
            s.r = 5;
            s.j = i + a * b * c;
            s.p_bounds = {a - 1, b - 1, c - 1};
            s.q_bounds = {s.j, s.j, s.j, 0, 0};
            break;
    }
    return s;
}

long long min_sufficient_s(const FamilyParams& p) {
    FamilyShape s = family_shape(p);
    Constraint pc = s.p();
    const auto num = static_cast<long long>(monomial_count(pc, s.i_f));
    const auto den = static_cast<long long>(monomial_count(pc, s.j - s.i_f));
    if (den == 0) throw std::domain_error("no monomials at degree j - i_f");
    return (num + den - 1) / den;
}

std::optional<long long> closed_form_s(const FamilyParams& p) {
    family_shape(p);
    const long long a = p.a, b = p.b, c = p.c, i = p.i;
    auto ceil_div = [](long long n, long long d) { return (n + d - 1) / d; };
    switch (p.kind) {
        case FamilyKind::F1: return ceil_div(a * (2 * i - a + 9), a * a - 3 * a + 2);
        case FamilyKind::F2: return ceil_div(4 * a * (2 * i - a + 7), (a - 1) * (a - 3));
        case FamilyKind::G1: return ceil_div(2 * i - a - b + 10, 2 * a * b - a - b - 2);
        case FamilyKind::G2:
            if (a == 2) return ceil_div(a * b * (2 * i - a - b + 8), a * b * (a * b - a - b) + 2);
            return ceil_div(2 * i - a - b + 8, a * b - a - b);
        case FamilyKind::H1: return ceil_div(2 * i - a - b - c + 11, 2 * a * b * c - a - b - c - 1);
        case FamilyKind::G3: return std::nullopt;
    }
    return std::nullopt;
}

std::uint64_t predicted_e_part(const FamilyParams& p, int d) {
    const long long a = p.a, b = p.b, c = p.c;
    switch (p.kind) {
        case FamilyKind::F1:
        case FamilyKind::F2: return static_cast<std::uint64_t>(a * (2LL * d - a + 3) / 2);
        case FamilyKind::H1: return static_cast<std::uint64_t>(a * b * c * (2LL * d - a - b - c + 5) / 2);
        default: return static_cast<std::uint64_t>(a * b * (2LL * d - a - b + 4) / 2);
    }
}

std::uint64_t predicted_f_part(const FamilyParams& p, int d) {
    FamilyShape s = family_shape(p);
    const long long e = s.j - d;
    switch (p.kind) {
        case FamilyKind::F2: return 2 * binomial(e + 2, 2);
        case FamilyKind::G2: return static_cast<std::uint64_t>((e + 1) * (e + 1));
        case FamilyKind::G3: return binomial(e + 3, 3);
        default: return binomial(e + 2, 2);
    }
}

std::uint64_t predicted_h(const FamilyParams& p, int d) {
    FamilyShape s = family_shape(p);
    if (d < p.i || d > s.i_f) throw std::out_of_range("degree outside the critical range");
    return predicted_e_part(p, d) + predicted_f_part(p, d);
}

std::vector<std::string> validate(const FamilyParams& p) {
    std::vector<std::string> v = shape_violations(p);
    if (!v.empty()) return v;
    if (p.s < 1) {
        v.push_back("s must be at least 1");
        return v;
    }
    const long long need = min_sufficient_s(p);
    if (p.s < need) v.push_back("s must be at least " + std::to_string(need) + " to be sufficient");
    FamilyShape s = family_shape(p);
    const auto cap = monomial_count(s.p(), s.j);
    if (static_cast<std::uint64_t>(p.s) > cap) v.push_back("s exceeds m_P(j) = " + std::to_string(cap));
    return v;
}

std::uint64_t expected_type(const FamilyParams& p) {
    FamilyShape s = family_shape(p);
    return std::min<std::uint64_t>(static_cast<std::uint64_t>(p.s), monomial_count(s.p(), s.j)) + s.u;
}

HomogeneousSubspace construct(const FamilyParams& p, std::uint64_t seed, const PrimeField& f) {
    FamilyShape s = family_shape(p);
    HomogeneousSubspace e(s.p(), f);
    Stream es(seed, "E-block");
    e.add_random(static_cast<std::size_t>(p.s), es);
    HomogeneousSubspace g(s.q(), f);
    Stream gs(seed, "F-block");
    g.add_random(static_cast<std::size_t>(s.u), gs);
    return HomogeneousSubspace::join(e, g);
}

std::string drop_shape(const std::vector<std::size_t>& h, bool double_drop) {
    if (double_drop) {
        if (h.size() >= 4 && h[0] > std::max(h[1], h[2]) && std::max(h[1], h[2]) < h[3]) return "double_drop";
    } else {
        if (h.size() >= 3 && h[0] > h[1] && h[1] < h[2]) return "single_drop";
    }
    return "no_drop";
}

std::uint64_t attempt_seed(std::uint64_t seed, int attempt) {
    if (attempt == 0) return seed;
    return Stream(seed, "reseed-" + std::to_string(attempt)).next();
}

DropReport verify_drop(const FamilyParams& p, std::uint64_t seed, int attempts, const PrimeField& f) {
    FamilyShape s = family_shape(p);
    DropReport rep;
    for (int d = static_cast<int>(p.i); d <= s.i_f; ++d) {
        rep.degrees.push_back(d);
        rep.predicted.push_back(predicted_h(p, d));
    }
    for (std::size_t k = 0; k + 1 < rep.degrees.size(); ++k) {
        const int d = rep.degrees[k];
        rep.delta_e.push_back(static_cast<long long>(predicted_e_part(p, d + 1)) - static_cast<long long>(predicted_e_part(p, d)));
        rep.delta_f.push_back(static_cast<long long>(predicted_f_part(p, d + 1)) - static_cast<long long>(predicted_f_part(p, d)));
    }
    rep.verdict = "mismatch";
    for (int k = 0; k < std::max(attempts, 1); ++k) {
        DropAttempt at;
        at.seed = attempt_seed(seed, k);
        HomogeneousSubspace w = construct(p, at.seed, f);
        for (int d : rep.degrees) at.measured.push_back(hilbert_value(w, d));
        rep.attempts.push_back(at);
        rep.measured = at.measured;
        bool same = true;
        for (std::size_t t = 0; t < rep.degrees.size(); ++t) same = same && at.measured[t] == rep.predicted[t];
        if (same) {
            rep.verdict = drop_shape(at.measured, s.double_drop);
            break;
        }
    }
    return rep;
}

std::size_t compute_type(const FamilyParams& p, std::uint64_t seed, const PrimeField& f) {
    HomogeneousSubspace w = construct(p, seed, f);
    return hilbert_value(w, w.socle_degree());
}

const std::vector<std::size_t> kBernsteinH = {1, 5, 12, 22, 35, 51, 70, 91, 90, 91, 70, 51, 35, 22, 12, 5, 1};

HomogeneousSubspace bernstein(BernsteinVariant v, std::uint64_t seed, const PrimeField& f) {
    HomogeneousSubspace w(Constraint::none(5, 16), f);
    Stream fs(seed, "bernstein-f"), gs(seed, "bernstein-g");
    std::vector<std::pair<MultiIndex, long long>> terms;
    for (const auto& m : enumerate_constrained(3, 15, {})) {
        terms.emplace_back(MultiIndex{m[0], m[1], m[2], 1, 0}, f.random(fs));
        terms.emplace_back(MultiIndex{m[0], m[1], m[2], 0, 1}, f.random(gs));
    }
    w.add_terms(terms);
    const int level = static_cast<int>(v);
    if (level >= 2) w.add_terms({{MultiIndex{0, 0, 0, 0, 16}, 1}});
    if (level >= 3) w.add_terms({{MultiIndex{0, 0, 0, 1, 15}, 1}});
    if (level >= 4) w.add_terms({{MultiIndex{0, 0, 0, 2, 14}, 1}});
    return w;
}

HomogeneousSubspace extend_codim(const HomogeneousSubspace& w, int k, bool separate) {
    if (k < 0) throw std::invalid_argument("extend_codim: negative count");
    const int r = w.num_vars(), j = w.socle_degree();
    HomogeneousSubspace out(Constraint(r + k, j, w.constraint().bounds()), w.field());
    auto lifted = [&](std::size_t g) {
        std::vector<std::pair<MultiIndex, long long>> terms;
        for (std::size_t t = 0; t < w.basis().size(); ++t) {
            if (w.generator(g)[t] == 0) continue;
            std::vector<int> e = w.basis()[t].exponents();
            e.resize(r + k, 0);
            terms.emplace_back(MultiIndex(e), w.generator(g)[t]);
        }
        return terms;
    };
    auto power = [&](int t) {
        std::vector<int> e(r + k, 0);
        e[r + t] = j;
        return MultiIndex(e);
    };
    for (std::size_t g = 0; g < w.num_generators(); ++g) {
        auto terms = lifted(g);
        if (!separate && g == 0)
            for (int t = 0; t < k; ++t) terms.emplace_back(power(t), 1);
        out.add_terms(terms);
    }
    if (separate || w.num_generators() == 0) {
        if (!separate) {
            std::vector<std::pair<MultiIndex, long long>> terms;
            for (int t = 0; t < k; ++t) terms.emplace_back(power(t), 1);
            out.add_terms(terms);
        } else {
            for (int t = 0; t < k; ++t) out.add_terms({{power(t), 1}});
        }
    }
    return out;
}

}  // namespace levelalg
