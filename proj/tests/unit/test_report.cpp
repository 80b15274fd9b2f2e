#include <doctest.h>

#include <pseudoval/errors.hpp>
#include <pseudoval/report.hpp>

using namespace pseudoval;

TEST_CASE("json rendering preserves insertion order") {
    RunReport r("dist");
    r.setString("eta", "1/4");
    r.setString("delta", "1");
    r.setBool("zero", false);
    r.setInt("samples", 8);
    CHECK(r.render(ReportFormat::Json) ==
          "{\"command\":\"dist\",\"eta\":\"1/4\",\"delta\":\"1\",\"zero\":false,"
          "\"samples\":8}");
}

TEST_CASE("text rendering is line-per-key") {
    RunReport r("we");
    r.setString("value", "1/2");
    r.setBool("contains", true);
    CHECK(r.render(ReportFormat::Text) == "command: we\nvalue: 1/2\ncontains: true");
}

TEST_CASE("the heuristic flag appears exactly when marked") {
    RunReport exact("member");
    exact.setBool("contains", true);
    CHECK(exact.render(ReportFormat::Json).find("heuristic") == std::string::npos);
    CHECK(!exact.heuristic());

    RunReport windowed("member");
    windowed.setBool("contains", true);
    windowed.markHeuristic();
    CHECK(windowed.heuristic());
    CHECK(windowed.render(ReportFormat::Json) ==
          "{\"command\":\"member\",\"contains\":true,\"heuristic\":true}");
    CHECK(windowed.render(ReportFormat::Text) ==
          "command: member\ncontains: true\nheuristic: true");
}

TEST_CASE("embedded documents nest instead of escaping") {
    RunReport r("limits");
    r.setDoc("seq", "{\"kind\":\"convergent\",\"base\":\"0\"}");
    CHECK(r.render(ReportFormat::Json) ==
          "{\"command\":\"limits\",\"seq\":{\"kind\":\"convergent\",\"base\":\"0\"}}");
    CHECK_THROWS_AS(r.setDoc("bad", "{oops"), DomainError);
}

TEST_CASE("string lists render as arrays") {
    RunReport r("suite");
    r.setStrings("criteria", {"c1", "c2"});
    CHECK(r.render(ReportFormat::Json) ==
          "{\"command\":\"suite\",\"criteria\":[\"c1\",\"c2\"]}");
}

TEST_CASE("format names") {
    CHECK(parseFormat("json") == ReportFormat::Json);
    CHECK(parseFormat("text") == ReportFormat::Text);
    CHECK_THROWS_AS(parseFormat("yaml"), DomainError);
}
