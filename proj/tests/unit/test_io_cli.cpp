#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "virtgraph/cli.hpp"
#include "virtgraph/io.hpp"

using namespace vg;

namespace {
const std::string kFixtures = VIRTGRAPH_FIXTURE_DIR;

struct Run {
  int code;
  std::string out, err;
};
Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("vgf round trip on fixtures") {
  int seen = 0;
  for (auto& ent : std::filesystem::directory_iterator(kFixtures)) {
    if (ent.path().extension() != ".vgf") continue;
    INFO(ent.path().string());
    SpatialDiagram d = read_vgf_file(ent.path().string());
    std::string text = serialize_vgf(d);
    SpatialDiagram e = parse_vgf(text);
    CHECK(serialize_vgf(e) == text);
    CHECK(e.base.sigma == d.base.sigma);
    CHECK(e.base.alpha == d.base.alpha);
    CHECK(e.crossings.size() == d.crossings.size());
    CHECK(input_hash(e) == input_hash(d));
    ++seen;
  }
  CHECK(seen >= 12);
  auto th = read_vgf_file(kFixtures + "/theta_p.vgf");
  CHECK(vertex_count(th.base) == 2);
  CHECK(th.base.edge_count() == 3);
}

TEST_CASE("vgf diagnostics") {
  auto msg = [](const std::string& text) {
    try {
      parse_vgf(text);
    } catch (const VgfError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(msg(R"({"vertices": [[0, 1, 1]], "edges": [[0, 1]]})").find("duplicate half-edge id 1") != std::string::npos);
  CHECK(msg(R"({"vertices": [[0]], "edges": [[0, 1]]})").find("half-edge 1 is on no vertex") != std::string::npos);
  CHECK(msg("{\"vertices\": [[0, 1]]\n  \"edges\": []}").find("line 2") != std::string::npos);
  CHECK(msg(R"({"vertices": [[0, 1]], "edges": [[0, 1]], "color": 1})").find("unknown field") != std::string::npos);
  // a crossing whose over pair is adjacent, not opposite
  std::string bad_cross = R"({"vertices": [[0, 1, 2, 3]], "edges": [[0, 2], [1, 3]],
    "crossings": [{"vertex": 0, "over": [0, 1]}]})";
  CHECK(msg(bad_cross).find("not opposite") != std::string::npos);
  std::string good_cross = R"({"vertices": [[0, 1, 2, 3]], "edges": [[0, 2], [1, 3]],
    "crossings": [{"vertex": 0, "over": [0, 2]}]})";
  CHECK(msg(good_cross).empty());
  // signs and twists are read
  auto d = parse_vgf(R"({"vertices": [[0, 2, 4], [1, 5, 3]], "edges": [[0, 1], [2, 3], [4, 5]],
    "vertex_signs": {"1": 1}, "edge_twists": [2]})");
  CHECK(vertex_sign(d.base, 0) == -1);
  CHECK(vertex_sign(d.base, 1) == 1);
  CHECK(d.base.twisted(4));
  CHECK(!d.base.twisted(0));
}

TEST_CASE("cli commands") {
  auto r = cli({"invariant", "--poly", "s", kFixtures + "/theta_t.vgf"});
  CHECK(r.code == 0);
  CHECK(r.out == "-2*Q + 2\n");
  r = cli({"gramian", "--n", "3", "--det"});
  CHECK(r.code == 0);
  CHECK(r.out == "Q^4 - 6*Q^3 + 9*Q^2 - 4*Q\n");
  r = cli({"classify", kFixtures + "/theta_t_as_spatial.vgf"});
  CHECK(r.code == 0);
  CHECK(r.out.find("classification: nonclassical") != std::string::npos);
  r = cli({"yamada", "--variant", "s", kFixtures + "/theta_t_as_spatial.vgf"});
  CHECK(r.out == "-2*q - 2 - 2*q^-1\n");
  r = cli({"golden", kFixtures + "/knotted_theta.vgf"});
  CHECK(r.out == "golden: holds\n");
  r = cli({"golden", kFixtures + "/theta_t_as_spatial.vgf"});
  CHECK(r.code == 1);
  r = cli({"obstruction", kFixtures + "/k33_drawn.vgf"});
  CHECK(r.out.find("zero: no") != std::string::npos);
  r = cli({"check", "--fixtures", kFixtures});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  r = cli({"enumerate", "--cubic", "--max-vertices", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("0 n=2 C(x) = -2*x + 2 planar\n", 0) == 0);
  CHECK(cli({"enumerate", "--cubic", "--max-vertices", "12"}).code == 2);
  CHECK(cli({"gramian", "--n", "6"}).code == 2);
  // usage and input errors
  CHECK(cli({}).code == 2);
  CHECK(cli({"invariant"}).code == 2);
  CHECK(cli({"invariant", "--poly", "zzz", kFixtures + "/k4.vgf"}).code == 2);
  CHECK(cli({"invariant", kFixtures + "/missing.vgf"}).code == 2);
  CHECK(cli({"invariant", "--poly", "s", kFixtures + "/theta_p_twisted.vgf"}).code == 1);
}

TEST_CASE("cli output is deterministic") {
  std::vector<std::string> args = {"--json", "classify", kFixtures + "/k4_r2.vgf"};
  auto a = cli(args), b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"input_hash\"") != std::string::npos);
  CHECK(a.out.find("\"engine\"") != std::string::npos);
}
