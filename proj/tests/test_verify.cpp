#include "doctest.h"

#include <sstream>

#include "l2disc/rational.hpp"
#include "l2disc/verify.hpp"

using namespace l2disc;

TEST_CASE("hammersley suite: 3 kinds x 11 orders, all passing") {
    const auto records = verify_hammersley(0, 10);
    CHECK(records.size() == 33);
    CHECK(all_passed(records));
    for (const auto& r : records) {
        CHECK(r.abs_residual >= 0.0);
        CHECK(r.rel_residual >= 0.0);
        CHECK(r.pass == (r.abs_residual <= r.tolerance || r.rel_residual <= r.tolerance));
    }
}

TEST_CASE("sum suite requires exact equality and passes") {
    const auto records = verify_sums(0, 6);
    CHECK(records.size() == 70);
    CHECK(all_passed(records));
    for (const auto& r : records) CHECK(r.tolerance == 0.0);
}

TEST_CASE("lattice suite on a reduced range") {
    const auto records = verify_lattice(55, 5, 100, 2024, 1e-9);
    CHECK(all_passed(records));
    CHECK(records.size() > 24); // 9 fibonacci lattices + 5 random, 3 kinds each
}

TEST_CASE("relation suite marks the grid rows expected-fail") {
    const auto records = verify_relation(6, 13, 2, 5);
    CHECK(all_passed(records));
    int grid_rows = 0;
    for (const auto& r : records) {
        if (r.expected_fail) {
            ++grid_rows;
            CHECK(!r.pass);
            CHECK(r.abs_residual > 1e-3);
        } else {
            CHECK(r.pass);
        }
    }
    CHECK(grid_rows == 4);
}

TEST_CASE("inequality and one-dimensional suites pass on random sets") {
    CHECK(all_passed(verify_inequalities(30, 99)));
    CHECK(all_passed(verify_one_dim(8, 123)));
}

TEST_CASE("identity suite passes at modest truncation") {
    CHECK(all_passed(verify_bilyk({{3, 5}, {1, 2}}, 2000)));
}

TEST_CASE("grid suite passes") {
    CHECK(all_passed(verify_grid(1, 4, 2)));
}

TEST_CASE("exhaustive m-bit digital suite") {
    const auto records = verify_digital_shift_mbit(2);
    REQUIRE(records.size() == 1);
    CHECK(records[0].pass);
    CHECK(records[0].closed_form ==
          doctest::Approx(Rational(599, 1152).to_double()).epsilon(1e-15));
}

TEST_CASE("monte carlo suites at small sample counts") {
    CHECK(all_passed(verify_digital_shift(2, 3000, 64, 7)));
    CHECK(all_passed(verify_geometric_shift(3000, 8)));
}

TEST_CASE("csv schema") {
    auto records = verify_relation(1, 2, 2, 2);
    std::stringstream ss;
    write_records_csv(ss, records);
    std::string header;
    std::getline(ss, header);
    CHECK(header == "suite,params,closed_form,oracle,abs_residual,rel_residual,tolerance,pass");
    int rows = 0;
    bool saw_expected_fail = false;
    std::string line;
    while (std::getline(ss, line)) {
        ++rows;
        CHECK(line.find("relation,") == 0);
        if (line.find("expect=fail") != std::string::npos) saw_expected_fail = true;
    }
    CHECK(rows == int(records.size()));
    CHECK(saw_expected_fail);
}

TEST_CASE("all_passed ignores expected-fail rows only") {
    VerificationRecord ok;
    ok.pass = true;
    VerificationRecord bad;
    bad.pass = false;
    VerificationRecord expected;
    expected.pass = false;
    expected.expected_fail = true;
    CHECK(all_passed({ok, expected}));
    CHECK(!all_passed({ok, bad}));
}
