#include "doctest.h"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "kuranet/config.hpp"
#include "kuranet/errors.hpp"
#include "kuranet/integrate.hpp"
#include "kuranet/result_io.hpp"
#include "kuranet/sweep.hpp"

using kuranet::CsvFormatError;
using kuranet::ResultRow;
using kuranet::ResultTable;

namespace {

ResultTable sample_table() {
    ResultTable t;
    t.rows = {
        {100, 0.0460517019, 0.25, 1, 0.312345678, 0.0123456789, 113, 0.0},
        {100, 0.0460517019, 0.25, 0, 0.298765432, 0.0198765432, 113, 0.0},
        {50, 1.0, 0.0, 0, 0.125, 0.01, 1225, 0.0},
        {100, 1.0, 0.25, 0, 0.5, 0.02, 4950, 0.0},
    };
    return t;
}

std::string write_to_string(const ResultTable& t) {
    std::ostringstream out;
    kuranet::write_result_csv(t, out);
    return out.str();
}

}  // namespace

TEST_CASE("format_g9 gives nine significant digits") {
    CHECK(kuranet::format_g9(0.123456789123) == "0.123456789");
    CHECK(kuranet::format_g9(1.0) == "1");
    CHECK(kuranet::format_g9(0.0) == "0");
    CHECK(kuranet::format_g9(-2.5) == "-2.5");
    CHECK(kuranet::format_g9(0.0460517019) == "0.0460517019");
}

TEST_CASE("result csv writes a fixed header and sorted rows") {
    std::string text = write_to_string(sample_table());
    std::istringstream in(text);
    std::string header;
    std::getline(in, header);
    REQUIRE(header == "N,p,K,rep,R_mean,R_std,edges,wall_s");
    std::string first;
    std::getline(in, first);
    // smallest (N, p, K, rep) first
    CHECK(first.substr(0, 5) == "50,1,");
    // the two rep rows of the same cell come in rep order
    CHECK(text.find(",0,0.298765432,") < text.find(",1,0.312345678,"));
}

TEST_CASE("result csv round trips") {
    ResultTable t = sample_table();
    std::string once = write_to_string(t);
    std::istringstream in(once);
    ResultTable back = kuranet::read_result_csv(in);
    REQUIRE(back.rows.size() == t.rows.size());
    // values survive to 9 significant digits, and a second write is
    // byte-identical to the first (stable fixed point)
    CHECK(write_to_string(back) == once);
    CHECK(back.rows[0].n == 50);
    CHECK(back.rows[0].edges == 1225);
    CHECK(back.rows[2].r_mean == doctest::Approx(0.312345678).epsilon(1e-9));
}

TEST_CASE("result csv accepts any column order") {
    std::istringstream in(
        "wall_s,edges,R_std,R_mean,rep,K,p,N\n"
        "0,113,0.01,0.3,0,0.05,0.5,100\n");
    ResultTable t = kuranet::read_result_csv(in);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0].n == 100);
    CHECK(t.rows[0].p == 0.5);
    CHECK(t.rows[0].k == 0.05);
    CHECK(t.rows[0].r_mean == 0.3);
    CHECK(t.rows[0].edges == 113);
}

TEST_CASE("result csv reports the missing column by name") {
    std::istringstream in("N,p,K,rep,R_std,edges,wall_s\n");
    try {
        (void)kuranet::read_result_csv(in);
        FAIL("expected CsvFormatError");
    } catch (const CsvFormatError& e) {
        CHECK(std::string(e.what()).find("R_mean") != std::string::npos);
    }
}

TEST_CASE("result csv rejects unknown and duplicate columns") {
    std::istringstream unknown("N,p,K,rep,R_mean,R_std,edges,wall_s,extra\nx\n");
    CHECK_THROWS_AS((void)kuranet::read_result_csv(unknown), CsvFormatError);
    std::istringstream dup("N,p,K,rep,R_mean,R_mean,edges,wall_s\nx\n");
    CHECK_THROWS_AS((void)kuranet::read_result_csv(dup), CsvFormatError);
    std::istringstream empty("");
    CHECK_THROWS_AS((void)kuranet::read_result_csv(empty), CsvFormatError);
}

TEST_CASE("result csv reports malformed rows with their line number") {
    auto expect_line = [](const std::string& text, const char* needle) {
        std::istringstream in(text);
        try {
            (void)kuranet::read_result_csv(in);
            FAIL_CHECK("expected CsvFormatError");
        } catch (const CsvFormatError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    const std::string header = "N,p,K,rep,R_mean,R_std,edges,wall_s\n";
    expect_line(header + "100,1,0.5,0,0.9,0.01,4950\n", "line 2");          // short row
    expect_line(header + "100,1,0.5,0,abc,0.01,4950,0\n", "line 2");        // not a number
    expect_line(header + "100,1,0.5,0,0.9,0.01,4950,0,9\n", "line 2");      // long row
    expect_line(header + "100,1,0.5,0,0.9,0.01,4950,0\n1.5,1,0.5,0,0.9,0.01,4950,0\n",
                "line 3");                                                  // fractional N
}

TEST_CASE("result csv tolerates CRLF and blank lines") {
    std::istringstream in(
        "N,p,K,rep,R_mean,R_std,edges,wall_s\r\n"
        "100,1,0.5,0,0.9,0.01,4950,0\r\n"
        "\n");
    ResultTable t = kuranet::read_result_csv(in);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0].r_mean == 0.9);
}

TEST_CASE("trace csv lists one row per recorded state") {
    kuranet::RunSummary s;
    s.r_series = {0.5, 0.25, 0.125};
    s.psi_series = {0.0, -0.5, 1.0};
    std::ostringstream out;
    kuranet::write_trace_csv(s, 0.1, out);
    CHECK(out.str() ==
          "step,t,R,psi\n"
          "0,0,0.5,0\n"
          "1,0.1,0.25,-0.5\n"
          "2,0.2,0.125,1\n");
}

TEST_CASE("variation csv flags the transition window") {
    kuranet::KcEstimate est;
    est.k_c = 0.2;
    est.k_values = {0.1, 0.2, 0.3};
    est.variation_by_k = {0.05, 0.01, 0.3};
    est.grand_mean_by_k = {0.1, 0.5, 0.9};
    std::ostringstream out;
    kuranet::write_variation_csv(est, out);
    CHECK(out.str() ==
          "K,variation,grand_mean_R,in_window\n"
          "0.1,0.05,0.1,0\n"
          "0.2,0.01,0.5,1\n"
          "0.3,0.3,0.9,0\n");
}

TEST_CASE("config parser handles comments, blanks, and order") {
    std::istringstream in(
        "# leading comment\n"
        "\n"
        "seed = 99\n"
        "sizes = 50,100\n"
        "  k_max =  0.5  # trailing comment\n"
        "seed = 100\r\n");
    auto kv = kuranet::parse_config(in);
    REQUIRE(kv.size() == 4);
    CHECK(kv[0] == std::pair<std::string, std::string>{"seed", "99"});
    CHECK(kv[1] == std::pair<std::string, std::string>{"sizes", "50,100"});
    CHECK(kv[2] == std::pair<std::string, std::string>{"k_max", "0.5"});
    // duplicates preserved in order; the consumer applies last-wins
    CHECK(kv[3] == std::pair<std::string, std::string>{"seed", "100"});
}

TEST_CASE("config parser rejects malformed lines with their number") {
    {
        std::istringstream in("seed = 1\nnot a pair\n");
        try {
            (void)kuranet::parse_config(in);
            FAIL("expected InvalidParameterError");
        } catch (const kuranet::InvalidParameterError& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
    }
    {
        std::istringstream in(" = 3\n");
        CHECK_THROWS_AS((void)kuranet::parse_config(in), kuranet::InvalidParameterError);
    }
}
