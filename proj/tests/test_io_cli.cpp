#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "liesc/io.hpp"
#include "liesc/liesc.hpp"
#include "support.hpp"

using namespace liesc;
namespace fs = std::filesystem;

namespace {

const Domain F2 = Domain::prime(2);
const Domain F3 = Domain::prime(3);

ErrorCode load_error(const std::string& text) {
  try {
    io::parse_algebra(text);
  } catch (const Error& err) {
    return err.code();
  }
  ADD_FAILURE() << "expected rejection of " << text;
  return ErrorCode::InternalAssertionFailed;
}

std::string file(const std::string& field, std::size_t dim, const std::string& brackets) {
  return R"({"format":"liesc-v1","field":)" + field + R"(,"dim":)" + std::to_string(dim) + R"(,"brackets":)" +
         brackets + "}";
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("liesc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST(Load, HeisenbergFile) {
  const LieAlgebra L = io::parse_algebra(
      R"({"format":"liesc-v1","field":{"kind":"prime","p":2},"dim":3,"brackets":[{"i":1,"j":2,"terms":[{"k":3,"c":"1"}]}]})");
  EXPECT_EQ(L, heisenberg(1, F2));
  EXPECT_EQ(center(L), span(F2, 3, {support::e(F2, 3, 3)}));
}

TEST(Load, EmptyBracketsIsAbelian) {
  EXPECT_EQ(io::parse_algebra(file(R"({"kind":"prime","p":3})", 4, "[]")), abelian(4, F3));
  EXPECT_EQ(io::parse_algebra(file(R"({"kind":"rational"})", 4, "[]")), abelian(4, Domain::rational()));
}

TEST(Load, JacobiViolationNamesTheTriple) {
  const std::string text = file(R"({"kind":"prime","p":2})", 3,
                                R"([{"i":1,"j":2,"terms":[{"k":3,"c":"1"}]},{"i":2,"j":3,"terms":[{"k":2,"c":"1"}]}])");
  try {
    io::parse_algebra(text);
    FAIL();
  } catch (const JacobiViolation& err) {
    EXPECT_EQ(err.triple(), (std::array<std::size_t, 3>{1, 2, 3}));
  }
}

TEST(Load, RejectsMalformedInput) {
  const std::string p2 = R"({"kind":"prime","p":2})";
  EXPECT_EQ(load_error("not json"), ErrorCode::ParseError);
  EXPECT_EQ(load_error(R"({"format":"other","field":{"kind":"rational"},"dim":1,"brackets":[]})"), ErrorCode::ParseError);
  EXPECT_EQ(load_error(file(R"({"kind":"prime","p":4})", 2, "[]")), ErrorCode::ParseError);
  EXPECT_EQ(load_error(file(R"({"kind":"prime","p":103})", 2, "[]")), ErrorCode::ParseError);
  EXPECT_EQ(load_error(file(R"({"kind":"real"})", 2, "[]")), ErrorCode::ParseError);
  EXPECT_EQ(load_error(file(p2, 3, R"([{"i":2,"j":1,"terms":[]}])")), ErrorCode::ParseError);
  EXPECT_EQ(load_error(file(p2, 3, R"([{"i":1,"j":2,"terms":[]},{"i":1,"j":2,"terms":[]}])")), ErrorCode::ParseError);
  EXPECT_EQ(load_error(file(p2, 3, R"([{"i":1,"j":4,"terms":[]}])")), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(load_error(file(p2, 3, R"([{"i":0,"j":2,"terms":[]}])")), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(load_error(file(p2, 3, R"([{"i":1,"j":2,"terms":[{"k":4,"c":"1"}]}])")), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(load_error(file(p2, 3, R"([{"i":1,"j":2,"terms":[{"k":3,"c":"2"}]}])")), ErrorCode::InvalidScalar);
  EXPECT_EQ(load_error(file(p2, 3, R"([{"i":1,"j":2,"terms":[{"k":3,"c":1}]}])")), ErrorCode::InvalidScalar);
  EXPECT_EQ(load_error(file(R"({"kind":"rational"})", 3, R"([{"i":1,"j":2,"terms":[{"k":3,"c":"1/0"}]}])")),
            ErrorCode::InvalidScalar);
}

TEST(Load, CustomPrimeCap) {
  const std::string text = file(R"({"kind":"prime","p":103})", 2, "[]");
  EXPECT_EQ(io::parse_algebra(text, io::LoadOptions{1000}).domain(), Domain::prime(103));
}

TEST(SaveLoad, RoundTripsTheCatalog) {
  for (Domain d : {F2, F3}) {
    for (const auto& entry : catalog(d, d == F2 ? 7 : 5)) {
      EXPECT_EQ(io::algebra_from_json(io::algebra_to_json(entry.algebra)), entry.algebra) << entry.id;
    }
  }
  const LieAlgebra q = central_product_on_centers(heisenberg(1, Domain::rational()),
                                                  filiform_standard(4, Domain::rational()), 1)
                           .algebra;
  EXPECT_EQ(io::algebra_from_json(io::algebra_to_json(q)), q);
}

TEST(SaveLoad, BasisNamesSurviveAndAppearInWitnesses) {
  StructureConstants sc(F2, 3);
  sc.set(0, 1, support::e(F2, 3, 3));
  const LieAlgebra L(sc, {"x1", "x2", "x"});
  const LieAlgebra back = io::algebra_from_json(io::algebra_to_json(L));
  EXPECT_EQ(back.basis_names(), L.basis_names());
  EXPECT_EQ(io::format_subspace(center(L), &L), "span{x}");
  EXPECT_EQ(io::subspace_to_json(center(L), &L)["named"][0], "x");
}

TEST(Certificate, JsonRoundTrip) {
  for (const LieAlgebra& L : {heisenberg(3, F3), support::supp6c()}) {
    const DecompositionCertificate c = decompose(L);
    const DecompositionCertificate back = io::certificate_from_json(io::certificate_to_json(c), L);
    EXPECT_EQ(back.kind, c.kind);
    EXPECT_EQ(back.factors, c.factors);
    EXPECT_EQ(back.nested_factors, c.nested_factors);
    EXPECT_EQ(back.trace.size(), c.trace.size());
    EXPECT_TRUE(verify_certificate(L, back).passed());
  }
  try {
    io::certificate_from_json(io::json{{"case", "three"}, {"factors", io::json::array()}}, heisenberg(1, F2));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::MalformedCertificate);
  }
}

TEST_F(CliTest, HeisenbergIsFrattinianAndDecomposes) {
  const std::string h2 = path("h2.json");
  EXPECT_EQ(run({"gen", "heisenberg", "--m", "2", "--field", "F3", "-o", h2}).code, 0);
  EXPECT_EQ(run({"check", "frattinian", h2}).code, 0);
  const std::string report = path("r.json");
  EXPECT_EQ(run({"decompose", h2, "--report", report}).code, 0);
  const io::json r = io::json::parse(io::read_file(report));
  EXPECT_EQ(r["result"]["case"], "one");
  ASSERT_EQ(r["result"]["factors"].size(), 2u);
  for (const auto& f : r["result"]["factors"]) EXPECT_EQ(f["dim"], 3);
  EXPECT_EQ(r["tool_version"], cli::kToolVersion);
  EXPECT_EQ(r["input_digest"], cli::sha256_hex(io::read_file(h2)));
  EXPECT_EQ(run({"verify", "certificate", h2, report}).code, 0);
}

TEST_F(CliTest, FiliformFailsWithWitness) {
  const std::string f5 = path("f5.json");
  EXPECT_EQ(run({"gen", "filiform", "--dim", "5", "--field", "F2", "-o", f5}).code, 0);
  const CliResult r = run({"check", "frattinian", f5});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("witness M = span{"), std::string::npos);
  EXPECT_EQ(run({"decompose", f5}).code, 1);
}

TEST_F(CliTest, InvalidInputExitsTwoWithErrorRecord) {
  const std::string bad = path("bad.json");
  io::write_text(bad, file(R"({"kind":"prime","p":2})", 3,
                           R"([{"i":1,"j":2,"terms":[{"k":3,"c":"1"}]},{"i":2,"j":3,"terms":[{"k":2,"c":"1"}]}])"));
  const CliResult r = run({"info", bad});
  EXPECT_EQ(r.code, 2);
  const io::json rec = io::json::parse(r.err);
  EXPECT_EQ(rec["error"]["code"], "JacobiViolation");
  EXPECT_EQ(rec["error"]["triple"], io::json::array({1, 2, 3}));
  EXPECT_EQ(run({"check", "frattinian", path("missing.json")}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"gen", "heisenberg", "--m", "1", "--field", "F4"}).code, 2);
  io::write_text(path("ab.json"), file(R"({"kind":"prime","p":2})", 2, "[]"));
  EXPECT_EQ(run({"decompose", path("ab.json")}).code, 2);
}

TEST_F(CliTest, ReportsAreDeterministicApartFromTiming) {
  const std::string h = path("h.json");
  ASSERT_EQ(run({"gen", "heisenberg", "--m", "3", "--field", "F2", "-o", h}).code, 0);
  io::json a = io::json::parse(run({"decompose", h, "--json"}).out);
  io::json b = io::json::parse(run({"decompose", h, "--json"}).out);
  a.erase("timing");
  b.erase("timing");
  EXPECT_EQ(a.dump(), b.dump());
}

TEST_F(CliTest, InfoAndMaximal) {
  const std::string h = path("h.json");
  ASSERT_EQ(run({"gen", "heisenberg", "--m", "1", "--field", "F2", "-o", h}).code, 0);
  const CliResult info = run({"info", h});
  EXPECT_EQ(info.code, 0);
  EXPECT_NE(info.out.find("nilpotency class: 2"), std::string::npos);
  EXPECT_NE(info.out.find("center: span{e3}"), std::string::npos);
  const CliResult m = run({"maximal", h, "--list", "--json"});
  EXPECT_EQ(m.code, 0);
  const io::json env = io::json::parse(m.out);
  EXPECT_EQ(env["result"]["count"], 3);
  EXPECT_EQ(env["result"]["items"].size(), 3u);
}

TEST_F(CliTest, CentralProductAndCatalogGeneration) {
  const std::string h = path("h.json");
  ASSERT_EQ(run({"gen", "heisenberg", "--m", "1", "--field", "F3", "-o", h}).code, 0);
  const std::string cp = path("cp.json");
  ASSERT_EQ(run({"gen", "central-product", "--left", h, "--right", h, "-o", cp}).code, 0);
  const LieAlgebra L = io::load(cp);
  EXPECT_EQ(L.dim(), 5u);
  EXPECT_EQ(decompose(L).factors.size(), 2u);

  const std::string dir = path("cat");
  ASSERT_EQ(run({"gen", "catalog", "--max-dim", "4", "--field", "F2", "-o", dir}).code, 0);
  const io::json index = io::json::parse(io::read_file(fs::path(dir) / "index.json"));
  const auto entries = catalog(F2, 4);
  ASSERT_EQ(index.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    EXPECT_EQ(io::load(fs::path(dir) / index[i]["file"].get<std::string>()), entries[i].algebra);
  }
}

TEST_F(CliTest, VerifySuiteOnSmallCatalog) {
  const CliResult r = run({"verify", "suite", "--field", "F3", "--max-dim", "4", "--json"});
  EXPECT_EQ(r.code, 0);
  const io::json env = io::json::parse(r.out);
  EXPECT_TRUE(env["result"]["passed"].get<bool>());
  EXPECT_TRUE(env["result"].contains("case_histogram"));
  EXPECT_EQ(env["result"]["lemmas"].size(), kAllLemmas.size());
}

TEST_F(CliTest, TamperedCertificateIsRejected) {
  const std::string h = path("h.json");
  ASSERT_EQ(run({"gen", "heisenberg", "--m", "2", "--field", "F2", "-o", h}).code, 0);
  const std::string report = path("r.json");
  ASSERT_EQ(run({"decompose", h, "--report", report}).code, 0);
  io::json env = io::json::parse(io::read_file(report));
  env["result"]["factors"].erase(1);
  io::write_text(report, env.dump());
  const CliResult r = run({"verify", "certificate", h, report});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("failed: sum of factors = L"), std::string::npos);
  io::write_text(report, "{}");
  EXPECT_EQ(run({"verify", "certificate", h, report}).code, 2);
}
