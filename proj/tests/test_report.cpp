#include <cmath>
#include <sstream>

#include "anharm/errors.hpp"
#include "anharm/literature.hpp"
#include "anharm/report.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace anharm;

TEST_CASE("embedded literature data") {
  const auto& lit = literature();
  CHECK(lit.version == 1);
  CHECK(lit.table1_z == 10.0);
  REQUIRE(lit.table1.size() == 8);
  REQUIRE(lit.table2.size() == 5);
  CHECK(lit.table1[0].f_accu.value == 2.26225951564);
  CHECK(lit.table1[0].f_accu.decimals == 11);
  CHECK(lit.table1[7].t_reduced.value == 30.0);
  CHECK(lit.table2[1].f3.text == "1.2355");
  CHECK(lit.table2[1].f3.last_digit() == doctest::Approx(1e-4));
  CHECK(lit.table2[0].f_kr3.value == 0.803882);
}

TEST_CASE("printed value parsing") {
  const auto v = parse_printed("-0.2099735");
  CHECK(v.value == -0.2099735);
  CHECK(v.decimals == 7);
  CHECK(parse_printed("30").decimals == 0);
  CHECK_THROWS_AS(parse_printed("abc"), ValidationError);
  CHECK_THROWS_AS(parse_printed("1.2x"), ValidationError);
  CHECK_THROWS_AS(parse_literature("{\"version\": 1}"), ValidationError);
}

TEST_CASE("request validation") {
  RunRequest r;
  CHECK_THROWS_AS(r.validate(), ValidationError);
  r.grid = {{1, 1, 1, 1}};
  CHECK_NOTHROW(r.validate());
  r.max_order = 1;
  CHECK_THROWS_AS(r.validate(), ValidationError);
  r.max_order = 4;
  r.points = 1;
  CHECK_THROWS_AS(r.validate(), ValidationError);
  r.points = 20;
  r.grid = {{1, 1, 0, 1}};
  CHECK_THROWS_AS(r.validate(), ValidationError);
  CHECK_THROWS_AS(run_point({1, 1, 0, 1}, RunRequest{}), ValidationError);
}

TEST_CASE("table rows") {
  const auto rows = run_table1(RunRequest{});
  REQUIRE(rows.size() == 8);
  for (const auto& row : rows) {
    CHECK(row.ok());
    REQUIRE(row.rescaled);
    CHECK(row.rescaled->z == doctest::Approx(10.0).epsilon(1e-14));
    const auto back = unrescale(*row.rescaled, row.params.lambda);
    CHECK(back.beta == doctest::Approx(row.params.beta).epsilon(1e-14));
    for (const auto& v : {row.f0, row.f2, row.f3, row.f4, row.exact}) {
      REQUIRE(v);
      CHECK(std::isfinite(*v));
    }
    CHECK(row.literature.size() == 5);
  }
  CHECK(std::abs(*rows[2].exact - 1.55569718863) < 1e-7);

  const auto t2 = run_table2(RunRequest{});
  REQUIRE(t2.size() == 5);
  CHECK_FALSE(t2[0].f4);
  CHECK(std::abs(*t2[1].f0 - 1.244312) < 5e-6);
  CHECK(std::abs(*t2[1].f2 - 1.216996) < 5e-6);
  CHECK(std::abs(*t2[1].f3 - 1.2355) < 5e-4);
  CHECK(std::abs(*t2[1].exact - 1.22459) < 5e-5);
  CHECK(std::abs(*t2[3].f0 - 5.425756) < 5e-6);
  CHECK(std::abs(*t2[3].f3 - 5.387961) < 5e-6);
  bool found = false;
  for (const auto& [name, value] : t2[0].literature) {
    if (name == "lit_F_kr3") {
      CHECK(value == 0.803882);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("figure series") {
  RunRequest r;
  r.points = 10;
  const auto fig2 = run_figure(Figure::Fig2, r);
  REQUIRE(fig2.size() == 50);
  CHECK(fig2.front().series == "z=0.2");
  CHECK(fig2.back().series == "z=50");
  CHECK_FALSE(fig2.front().f2);
  CHECK(fig2.back().params.temperature() == doctest::Approx(50.0));
  const double gap_soft = *fig2[9].f0 - *fig2[9].f4;
  const double gap_stiff = *fig2[49].f0 - *fig2[49].f4;
  CHECK(gap_soft > gap_stiff);
  for (const auto& row : fig2) CHECK(*row.f4 < *row.f0);

  const auto fig3 = run_figure(Figure::Fig3, r);
  const auto& cold = fig3.back();
  CHECK(cold.params.beta == 20.0);
  CHECK(*cold.f0 > *cold.f3);
  CHECK(*cold.f3 > *cold.exact);
  CHECK(*cold.exact > *cold.f2);
  CHECK(*cold.f2 > *cold.f4);

  const auto fig1 = run_figure(Figure::Fig1, r);
  CHECK(fig1.front().params.temperature() == doctest::Approx(0.1));
  CHECK(std::abs(*fig1.front().f2 - *fig1.front().exact) < std::abs(*fig1.front().f0 - *fig1.front().exact));
}

TEST_CASE("oracle check at unit parameters") {
  RunRequest r;
  r.command = Command::OracleCheck;
  r.grid = {{1, 1, 1, 2}};
  r.exact = true;
  const auto rows = run(r);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].ok());
  CHECK(*rows[0].quad_c4 == doctest::Approx(*rows[0].c4).epsilon(1e-4));
  CHECK(*rows[0].exact < *rows[0].f0);
}

TEST_CASE("writers") {
  RunRequest r;
  r.grid = {{1, 1, 1, 5}, {1, 2, 3, 0.5}};
  r.max_order = 3;
  const auto rows = run_sweep(r);

  std::ostringstream a, b;
  write_csv(a, rows);
  write_csv(b, rows);
  CHECK(a.str() == b.str());
  std::istringstream lines(a.str());
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  CHECK(header == "mass,omega,lambda,beta,T,z,t_reduced,order,Omega,F0,F2,F3,series_status");
  CHECK(first.find("0.812490921") != std::string::npos);
  CHECK(first.find(",,") == std::string::npos);
  CHECK(a.str().back() == '\n');

  std::ostringstream js;
  write_json(js, rows);
  const auto doc = nlohmann::json::parse(js.str());
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["F0"].is_number_float());
  CHECK(doc[0]["series_status"] == "converged");
  CHECK_FALSE(doc[0].contains("F4"));

  std::ostringstream tb;
  write_table(tb, rows);
  CHECK(tb.str().find("F3") != std::string::npos);
  CHECK(format_number(1.0 / 3.0) == "0.333333333");
}
