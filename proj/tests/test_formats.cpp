#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "qent/inequalities.hpp"
#include "qent/io.hpp"
#include "qent/randstates.hpp"
#include "qent/reports.hpp"
#include "qent/svg.hpp"
#include "support.hpp"

using namespace qent;
using testsup::Cmat;

namespace {

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("format_full round-trips doubles bit-exactly") {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 2.2250738585072014e-308, -0.0, 0.985,
                   1.6094379124341003, 123456789.123456789, -2.7e-4}) {
    const std::string s = io::format_full(v);
    const double back = std::strtod(s.c_str(), nullptr);
    CHECK(std::memcmp(&back, &v, sizeof v) == 0);
  }
}

TEST_CASE("DM-JSON round trip is bit-exact on random matrices") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Cmat m = generate(StateRecipe::ginibre(5, seed)).matrix();
    CHECK(testsup::bit_equal(io::parse_matrix_json(io::to_dm_json(m)), m));
  }
}

TEST_CASE("DM-CSV round trip is bit-exact") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Cmat m = generate(StateRecipe::ginibre(4, seed)).matrix();
    CHECK(testsup::bit_equal(io::parse_matrix_csv(io::to_dm_csv(m)), m));
  }
}

TEST_CASE("DM-JSON parsing: schema violations raise ParseError") {
  CHECK_THROWS_AS(io::parse_matrix_json("{"), ParseError);
  CHECK_THROWS_AS(io::parse_matrix_json("[1,2]"), ParseError);
  CHECK_THROWS_AS(io::parse_matrix_json(R"({"dim": 2, "matrix": [[[0,0],[0,0]]]})"),
                  ParseError);  // one row instead of two
  CHECK_THROWS_AS(io::parse_matrix_json(R"({"dim": 1, "matrix": [[[0]]]})"), ParseError);
  CHECK_THROWS_AS(io::parse_matrix_json(R"({"dim": 0, "matrix": []})"), ParseError);
  CHECK_THROWS_AS(io::parse_matrix_json(R"({"matrix": [[[0,0]]]})"), ParseError);
  CHECK_THROWS_AS(io::parse_matrix_json(R"({"dim": 1, "matrix": [[["a",0]]]})"), ParseError);
}

TEST_CASE("DM-JSON parsing: extra keys are tolerated, fixtures load") {
  const Cmat m = io::read_matrix_file(testsup::fixture("rho23_printed.json"));
  REQUIRE(m.rows() == 4);
  CHECK(m(1, 1) == std::complex<double>(0.961, 0.0));
  CHECK(m(0, 0) == std::complex<double>(0.0, 0.0));

  const Cmat mixed = io::read_matrix_file(testsup::fixture("mixed5.json"));
  REQUIRE(mixed.rows() == 5);
  CHECK(mixed(2, 2) == std::complex<double>(0.2, 0.0));
}

TEST_CASE("DM-CSV parsing: shape and token errors") {
  CHECK_THROWS_AS(io::parse_matrix_csv(""), ParseError);
  CHECK_THROWS_AS(io::parse_matrix_csv("1,0,0,0\n"), ParseError);        // 1 line, width 2
  CHECK_THROWS_AS(io::parse_matrix_csv("1,0\n0,1\n"), ParseError);       // width 1 needs 1 line
  CHECK_THROWS_AS(io::parse_matrix_csv("1,x\n"), ParseError);
  CHECK_THROWS_AS(io::parse_matrix_csv("nan,0\n"), ParseError);

  const Cmat one = io::parse_matrix_csv("0.5,0\n");
  CHECK(one.rows() == 1);
  CHECK(one(0, 0).real() == 0.5);
}

TEST_CASE("subadditivity report JSON round trip") {
  const SubadditivityReport<double> rep = check_subadditivity(
      generate(StateRecipe::ginibre(5, 11)), 4, PartitionScheme::qutrit_qubit());
  const std::string text =
      reports::render(rep, reports::Format::Json, {0.02, 0.02, 1e-9});
  const SubadditivityReport<double> back = reports::parse_subadditivity_json(text);
  CHECK(back.scheme == rep.scheme);
  CHECK(back.zero_position == rep.zero_position);
  CHECK(back.s_total == rep.s_total);
  CHECK(back.s_first == rep.s_first);
  CHECK(back.s_second == rep.s_second);
  CHECK(back.s_sum == rep.s_sum);
  CHECK(back.mutual_info == rep.mutual_info);
  CHECK(back.margin == rep.margin);
  CHECK(back.holds == rep.holds);
  CHECK(back.num_tol == rep.num_tol);
}

TEST_CASE("ssa report JSON round trip, including clamp records") {
  const SSAReport<double> rep = check_strong_subadditivity(
      generate(StateRecipe::pure(5, 13)), ReductionMode::Canonical);
  const std::string text = reports::render(rep, reports::Format::Json, {0.02, 0.02, 1e-9});
  const SSAReport<double> back = reports::parse_ssa_json(text);
  CHECK(back.mode == rep.mode);
  CHECK(back.s_total == rep.s_total);
  CHECK(back.s_r2 == rep.s_r2);
  CHECK(back.s_12 == rep.s_12);
  CHECK(back.s_23 == rep.s_23);
  CHECK(back.lhs == rep.lhs);
  CHECK(back.rhs == rep.rhs);
  CHECK(back.mutual_info == rep.mutual_info);
  CHECK(back.verdict == rep.verdict);
  CHECK(back.num_tol == rep.num_tol);
  REQUIRE(back.clamps.size() == rep.clamps.size());
  for (std::size_t i = 0; i < rep.clamps.size(); ++i) {
    CHECK(back.clamps[i].matrix == rep.clamps[i].matrix);
    CHECK(back.clamps[i].count == rep.clamps[i].count);
    CHECK(back.clamps[i].min_eigenvalue == rep.clamps[i].min_eigenvalue);
  }
}

TEST_CASE("sweep table CSV and JSON round trips") {
  const SweepTable<double> table =
      sweep_zero_position(generate(StateRecipe::ginibre(5, 17)));
  const std::string csv = reports::render(table, reports::Format::Csv, {});
  const SweepTable<double> back = reports::parse_sweep_csv(csv);
  REQUIRE(back.rows.size() == table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    CHECK(back.rows[i].zero_position == table.rows[i].zero_position);
    CHECK(back.rows[i].s_total == table.rows[i].s_total);
    CHECK(back.rows[i].s_bp1 == table.rows[i].s_bp1);
    CHECK(back.rows[i].s_bp2 == table.rows[i].s_bp2);
    CHECK(back.rows[i].i_bp1 == table.rows[i].i_bp1);
    CHECK(back.rows[i].i_bp2 == table.rows[i].i_bp2);
  }
  // re-rendering the parsed table reproduces the bytes
  CHECK(reports::render(back, reports::Format::Csv, {}) == csv);

  const std::string json = reports::render(table, reports::Format::Json, {});
  const SweepTable<double> jback = reports::parse_sweep_json(json);
  for (std::size_t i = 0; i < table.rows.size(); ++i)
    CHECK(jback.rows[i].s_bp1 == table.rows[i].s_bp1);
}

TEST_CASE("human tables show 4 decimal places") {
  const SweepTable<double> table = sweep_zero_position(
      validate_density(io::read_matrix_file(testsup::fixture("mixed5.json"))));
  const std::string text = reports::render(table, reports::Format::Table, {});
  CHECK(text.find("(1;1)") != std::string::npos);
  CHECK(text.find("(6;6)") != std::string::npos);
  CHECK(text.find("1.6094") != std::string::npos);
}

TEST_CASE("svg: 2x2 identity/2 has four cells with two equal maxima") {
  Cmat m = Cmat::Zero(2, 2);
  m(0, 0) = 0.5;
  m(1, 1) = 0.5;
  const std::string svg_text = svg::render_matrix(m);
  CHECK(count_occurrences(svg_text, "class=\"cell\"") == 4);
  CHECK(count_occurrences(svg_text, "fill=\"#0b5394\"") == 2);  // the two maxima
  CHECK(count_occurrences(svg_text, "fill=\"#ffffff\"") >= 2);  // zero cells + background
  CHECK(svg_text == svg::render_matrix(m));                     // byte determinism
}

TEST_CASE("svg: dominant corner of the published 4x4 reduction") {
  const Cmat m = io::read_matrix_file(testsup::fixture("rho12_printed.json"));
  const std::string svg_text = svg::render_matrix(m);
  CHECK(count_occurrences(svg_text, "class=\"cell\"") == 16);
  // (1,1) = 0.959 is the unique maximum
  CHECK(count_occurrences(svg_text, "fill=\"#0b5394\"") == 1);
  CHECK(svg_text.find("<title>(1,1) 0.959") != std::string::npos);
}

TEST_CASE("svg: signed components use the diverging ramp") {
  Cmat m = Cmat::Zero(2, 2);
  m(0, 1) = {0.0, -1.0};
  m(1, 0) = {0.0, 1.0};
  svg::Options opt;
  opt.component = svg::Component::Imag;
  const std::string svg_text = svg::render_matrix(m, opt);
  CHECK(count_occurrences(svg_text, "fill=\"#0b5394\"") == 1);  // +1
  CHECK(count_occurrences(svg_text, "fill=\"#b02020\"") == 1);  // -1
}
