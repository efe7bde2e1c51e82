#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <nlohmann/json.hpp>
#include <unistd.h>

#include "fixtures.hpp"
#include "pythsix/cli.hpp"
#include "pythsix/io.hpp"

using namespace pythsix;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("pythsix_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "pythsix");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = cli::run(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("json round trips are bit exact") {
  QPoly q = fx::beauregard_A() * fx::beauregard_B();
  std::string text = qpoly_to_json(q);
  CHECK(qpoly_from_json(text) == q);
  CHECK(qpoly_to_json(qpoly_from_json(text)) == text);

  PythTuple x = triple_to_tuple({fx::beauregard_P(), fx::beauregard_Q(), fx::beauregard_R()});
  std::string tt = tuple_to_json(x);
  CHECK(tuple_from_json(tt) == x);
  CHECK(tuple_to_json(tuple_from_json(tt)) == tt);

  SolveCertificate cert = solve_22(x);
  cert.transforms.push_back(CertStep::divide(fx::Ur() + RPoly(1L), DivideMode::QR));
  cert.transforms.push_back(CertStep::relabel());
  std::string ct = certificate_to_json(cert);
  SolveCertificate back = certificate_from_json(ct);
  CHECK(back.transforms == cert.transforms);
  CHECK(back.A == cert.A);
  CHECK(back.D == cert.D);
  CHECK(certificate_to_json(back) == ct);

  RPoly approx = RPoly(FieldElement::approx(0.1)) * fx::Ur();
  CHECK(rpoly_to_json(rpoly_from_json(rpoly_to_json(approx))) == rpoly_to_json(approx));

  CHECK_THROWS_AS(qpoly_from_json("{\"degu\":0,\"degv\":0,\"coeffs\":[{\"i\":1,\"j\":0,\"q\":[\"1\",\"0\",\"0\",\"0\"]}]}"),
                  Error);
  CHECK_THROWS_AS(rpoly_from_json("{\"degu\":0,\"degv\":0,\"coeffs\":[{\"i\":0,\"j\":0,\"q\":[\"1\",\"1\",\"0\",\"0\"]}]}"),
                  Error);
  CHECK_THROWS_AS(tuple_from_json("[1, 2"), Error);
}

TEST_CASE("cli make, verify, solve and replay") {
  TempDir tmp;
  write_file(tmp.file("abcd.json"),
             factors_to_json({fx::beauregard_A(), fx::beauregard_B(), fx::beauregard_C(), RPoly(1L)}));
  CHECK(run({"make", tmp.file("abcd.json"), "--out", tmp.file("tuple.json")}).code == 0);
  CHECK(run({"verify", tmp.file("tuple.json")}).code == 0);

  Run solved = run({"solve", tmp.file("tuple.json"), "--out", tmp.file("cert.json")});
  CHECK(solved.code == 0);
  CHECK(run({"replay", tmp.file("cert.json"), tmp.file("tuple.json")}).code == 0);

  // Every written file reads back to the same bytes.
  std::string cert_text = read_file(tmp.file("cert.json"));
  CHECK(certificate_to_json(certificate_from_json(cert_text)) + "\n" == cert_text);
  std::string tuple_text = read_file(tmp.file("tuple.json"));
  CHECK(tuple_to_json(tuple_from_json(tuple_text)) + "\n" == tuple_text);

  SolveCertificate tampered = certificate_from_json(cert_text);
  tampered.A = tampered.A + QPoly(1L);
  write_file(tmp.file("bad_cert.json"), certificate_to_json(tampered));
  CHECK(run({"replay", tmp.file("bad_cert.json"), tmp.file("tuple.json")}).code == 1);
}

TEST_CASE("cli exit codes") {
  TempDir tmp;
  PythTuple one;
  one.X[0] = RPoly(1L);
  write_file(tmp.file("one.json"), tuple_to_json(one));
  Run r = run({"verify", tmp.file("one.json")});
  CHECK(r.code == 1);
  CHECK(r.out == "residual: 1\n");

  write_file(tmp.file("bad.json"), "{\"tuple\": [");
  CHECK(run({"verify", tmp.file("bad.json")}).code == 2);
  CHECK(run({"verify", tmp.file("missing.json")}).code == 5);
  CHECK(run({"bogus"}).code == 2);

  PythTuple zero;
  write_file(tmp.file("zero.json"), tuple_to_json(zero));
  CHECK(run({"solve", tmp.file("zero.json")}).code == 0);

  PythTuple big;
  big.X[4] = fx::Ur() * fx::Ur() * fx::Ur();
  big.X[5] = big.X[4];
  write_file(tmp.file("big.json"), tuple_to_json(big));
  CHECK(run({"solve", tmp.file("big.json")}).code == 4);
  CHECK(run({"solve", tmp.file("one.json")}).code == 1);
}

TEST_CASE("cli surface and selftest") {
  TempDir tmp;
  Run e = run({"surface", "E", "--alpha", "0,0,0,2,0,0,1", "--beta", "0,0,0,1,0,1,0", "--res", "16x12", "--out",
               tmp.file("e.obj"), "--csv", tmp.file("e.csv")});
  CHECK(e.code == 0);
  auto report = nlohmann::json::parse(read_file(tmp.file("e.obj.report.json")));
  CHECK(report["all_cocircular"] == true);
  CHECK(report["curves"].size() == 28);
  CHECK(fs::exists(tmp.file("e.csv")));

  CHECK(run({"surface", "C", "--seed", "4", "--res", "24x24", "--out", tmp.file("c.obj")}).code == 0);
  CHECK(run({"surface", "D", "--cyclide", "sphere", "--res", "12x12"}).code == 0);
  CHECK(run({"surface", "E", "--res", "1x4"}).code == 2);
  CHECK(run({"selftest", "--count", "5"}).code == 0);
}
