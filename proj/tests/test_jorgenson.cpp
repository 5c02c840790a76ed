#include <doctest.h>

#include "sigma45/jorgenson.hpp"

using namespace sigma45;

namespace {
GradedPoly var(const std::string& n) {
    auto sig = jorgenson_signature();
    return GradedPoly::variable(sig, sig->index_of(n));
}
} // namespace

TEST_CASE("stratum definitions from the determinant limits") {
    // k=5: no a6 dependence => sigma_6 = 0 one stratum down
    JorgensonResult r5 = jorgenson_reduce(5);
    CHECK_FALSE(r5.singular);
    CHECK(r5.independent_a == std::vector<int>{6});
    // k=4 adds sigma_5, k=3 adds sigma_4
    CHECK(jorgenson_reduce(4).independent_a == std::vector<int>{5, 6});
    CHECK(jorgenson_reduce(3).independent_a == std::vector<int>{4, 5, 6});
}

TEST_CASE("two-point quotient identity") {
    JorgensonResult r = jorgenson_reduce(3);
    GradedPoly expect = var("a1") * var("t1") * var("s2") - var("a1") * var("s1") * var("t2") +
                        var("a2") * var("s1") - var("a2") * var("s2") - var("a3") * var("t1") +
                        var("a3") * var("t2");
    GradedPoly expect_den = var("b1") * var("t1") * var("s2") - var("b1") * var("s1") * var("t2") +
                            var("b2") * var("s1") - var("b2") * var("s2") - var("b3") * var("t1") +
                            var("b3") * var("t2");
    CHECK(r.quotient_num == expect);
    CHECK(r.quotient_den == expect_den);
}

TEST_CASE("one-point fallback detects the singular case") {
    JorgensonResult r = jorgenson_reduce(2);
    CHECK(r.singular);
    GradedPoly expect = var("a1") * var("t1") - var("a2");
    GradedPoly expect_den = var("b1") * var("t1") - var("b2");
    CHECK(r.quotient_num == expect);
    CHECK(r.quotient_den == expect_den);
    // no dependence on a3..a6: sigma_3 joins the vanishing list on the
    // one-point stratum
    CHECK(r.independent_a == std::vector<int>{3, 4, 5, 6});
}
