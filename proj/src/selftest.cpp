#include "levelalg/selftest.hpp"

#include "levelalg/apolarity.hpp"
#include "levelalg/gqposet.hpp"
#include "levelalg/multiindex.hpp"

namespace levelalg {

std::vector<int> random_bounds(Stream& s, std::size_t max_size) {
    std::vector<int> q;
    std::size_t size = 1;
    const int dims = static_cast<int>(s.between(0, 3));
    for (int k = 0; k < dims; ++k) {
        const std::size_t room = max_size / size;
        if (room < 2) break;
        const int b = static_cast<int>(s.between(1, static_cast<long long>(room) - 1));
        q.push_back(b);
        size *= static_cast<std::size_t>(b) + 1;
    }
    return q;
}

GQBlockStructure random_square_blocks(const std::vector<int>& q, Stream& s, std::size_t max_n) {
    GQPoset g(q);
    GQBlockStructure b{q, std::vector<std::size_t>(g.size(), 0), std::vector<std::size_t>(g.size(), 0)};
    const std::size_t n = static_cast<std::size_t>(s.between(1, static_cast<long long>(max_n)));
    for (std::size_t k = 0; k < n; ++k) {
        ++b.row_sizes[s.below(g.size())];
        ++b.col_sizes[s.below(g.size())];
    }
    return b;
}

namespace {

CheckResult topset_check(Stream& s) {
    CheckResult r{"tpp_tap", true, 0, ""};
    for (int rep = 0; rep < 40; ++rep) {
        GQPoset g(random_bounds(s, 16));
        OrderPreservingFn phi = random_order_preserving(g.order(), s);
        PropertyVerdict tpp = check_tpp(g.order(), phi);
        PropertyVerdict tap = check_tap(g.order(), phi);
        PropertyVerdict shifted = check_tpp(g.order(), phi.centered());
        ++r.cases;
        if (!tpp.holds || tap.holds != shifted.holds) {
            r.pass = false;
            r.detail = "violation on a G_Q with " + std::to_string(g.size()) + " elements";
            break;
        }
    }
    return r;
}

CheckResult excess_check(Stream& s) {
    CheckResult r{"excess_test_vs_determinant", true, 0, ""};
    for (int rep = 0; rep < 60; ++rep) {
        auto q = random_bounds(s, 8);
        GQBlockStructure b = random_square_blocks(q, s, 6);
        SymbolicMatrix m = random_gq_lmatrix(b, s);
        const bool predicted = excess_test(b);
        const bool forms = predicted == excess_test(b, ExcessForm::TopsetsWithoutBottom) &&
                           predicted == excess_test(b, ExcessForm::ProperBottomsets) &&
                           predicted == excess_test(b, ExcessForm::BottomsetsWithoutTop);
        ++r.cases;
        if (!forms || predicted != det_exact(m).nonzero) {
            r.pass = false;
            r.detail = "disagreement on a " + std::to_string(m.rows()) + "x" + std::to_string(m.rows()) + " matrix";
            break;
        }
    }
    return r;
}

CheckResult count_check(Stream& s) {
    CheckResult r{"closed_form_counts", true, 0, ""};
    for (int rep = 0; rep < 300; ++rep) {
        const int rv = static_cast<int>(s.between(1, 6));
        const int d = static_cast<int>(s.between(0, 20));
        const int j = static_cast<int>(s.between(d, 24));
        const int n = static_cast<int>(s.between(0, rv));
        std::vector<int> q;
        for (int k = 0; k < n; ++k) q.push_back(s.below(4) == 0 ? j : static_cast<int>(s.between(0, std::min(j, 8))));
        Constraint c(rv, j, q);
        CountResult cf = count_constrained(c, d, CountMethod::ClosedForm);
        if (!cf.value) continue;
        ++r.cases;
        if (*cf.value != *count_constrained(c, d, CountMethod::Enumerate).value) {
            r.pass = false;
            r.detail = "rule " + cf.rule + " disagrees with enumeration";
            break;
        }
    }
    return r;
}

CheckResult crop_check(Stream& s, const PrimeField& f) {
    CheckResult r{"cropped_rank", true, 0, ""};
    for (int rep = 0; rep < 30; ++rep) {
        const int rv = static_cast<int>(s.between(1, 4));
        const int j = static_cast<int>(s.between(1, 6));
        const int n = static_cast<int>(s.between(0, rv));
        std::vector<int> q;
        for (int k = 0; k < n; ++k) q.push_back(static_cast<int>(s.between(0, j)));
        Constraint c(rv, j, q);
        const std::size_t gens = static_cast<std::size_t>(s.between(1, 3));
        HomogeneousSubspace w(c, f);
        w.add_random(gens, s);
        const int d = static_cast<int>(s.between(0, j));
        ++r.cases;
        const bool ranks = rank(build_dense(w, d, true), f) == rank(build_dense(w, d, false), f);
        SymbolicMatrix sym = build_symbolic(c, gens, d, true);
        GQBlockStructure blocks = measured_blocks(c, gens, d);
        GQBlockStructure formula = standard_blocks(c, gens, d);
        const bool shape = classify(sym).is_l && verify_gq_pattern(sym, blocks).ok &&
                           blocks.row_sizes == formula.row_sizes && blocks.col_sizes == formula.col_sizes;
        if (!ranks || !shape) {
            r.pass = false;
            r.detail = ranks ? "block structure check failed" : "cropping changed the rank";
            break;
        }
    }
    return r;
}

}  // namespace

std::vector<CheckResult> run_selftest(std::uint64_t seed, const PrimeField& f) {
    Stream s(seed, "selftest");
    std::vector<CheckResult> out;
    Stream a = s.split("tpp");
    out.push_back(topset_check(a));
    Stream b = s.split("excess");
    out.push_back(excess_check(b));
    Stream c = s.split("counts");
    out.push_back(count_check(c));
    Stream d = s.split("crop");
    out.push_back(crop_check(d, f));
    return out;
}

}  // namespace levelalg
