#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "document.hpp"
#include "leapcycles/constructor.hpp"
#include "test_support.hpp"
#include "worked_example.hpp"

namespace leapcycles::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "leaper-cycles");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("leapcycles_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  [[nodiscard]] fs::path file(const std::string& name) const { return path_ / name; }
  void write(const std::string& name, const std::string& text) const {
    std::ofstream(file(name), std::ios::binary) << text;
  }

 private:
  fs::path path_;
};

const fs::path kGolden = LEAPCYCLES_GOLDEN_DIR;

TEST(Document, TextRoundTripBothEncodings) {
  CycleDocument doc{4, 3, Encoding::Tuples, {0, 14, 3, 13}, false};
  EXPECT_EQ(parse_document(write_text(doc)), doc);
  doc.encoding = Encoding::Ints;
  EXPECT_EQ(parse_document(write_text(doc)), doc);
  EXPECT_EQ(parse_document(write_json(doc)), doc);
  doc.encoding = Encoding::Tuples;
  EXPECT_EQ(parse_document(write_json(doc)), doc);
}

TEST(Document, HeaderFormat) {
  const CycleDocument doc{2, 1, Encoding::Tuples, {0, 1, 3, 2}, true};
  EXPECT_EQ(write_text(doc), "# k=2 h=1 encoding=tuples closed=true\n0 0\n1 0\n1 1\n0 1\n");
  CycleDocument ints = doc;
  ints.encoding = Encoding::Ints;
  EXPECT_EQ(write_text(ints), "# k=2 h=1 encoding=ints closed=true bit0=leftmost\n0\n1\n3\n2\n");
  EXPECT_EQ(write_json(ints),
            "{\"k\":2,\"h\":1,\"encoding\":\"ints\",\"bit0\":\"leftmost\",\"cycle\":[0,1,3,2],\"closed\":true}\n");
}

TEST(Document, ParseErrorsCarryPosition) {
  EXPECT_THROW((void)parse_document(""), ParseError);
  EXPECT_THROW((void)parse_document("   \n"), ParseError);
  try {
    (void)parse_document("# k=3 h=1 encoding=tuples closed=true\n0 0 0\n1 0 2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3U);
    EXPECT_EQ(e.column(), 5U);
  }
  try {
    (void)parse_document("# k=3 h=1 encoding=tuples closed=true\n0 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
  }
  EXPECT_THROW((void)parse_document("# k=3 h=1 encoding=hex closed=true\n"), ParseError);
  EXPECT_THROW((void)parse_document("# k=3 h=1 closed=true\n"), ParseError);
  EXPECT_THROW((void)parse_document("k=3 h=1 encoding=ints closed=true\n"), ParseError);
  EXPECT_THROW((void)parse_document("{\"k\":3,"), ParseError);
  EXPECT_THROW((void)parse_document("# k=2 h=1 encoding=ints closed=true\n-1\n"), ParseError);
}

TEST(Document, IntsAllowOutOfRangeForVerifier) {
  const auto doc = parse_document("# k=2 h=1 encoding=ints closed=true\n0\n1\n3\n6\n");
  EXPECT_EQ(doc.cycle.back(), 6U);
}

TEST(CliConstruct, WorkedExampleGolden) {
  const auto r = run_cli({"construct", "--k", "5", "--h", "3", "--format", "tuples"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, slurp(kGolden / "construct_k5_h3.txt"));
  const auto doc = parse_document(r.out);
  EXPECT_EQ(VertexPath(Dimension(doc.k), doc.cycle), testing::path_of(fixtures::kP3_C25));
}

TEST(CliConstruct, IntsAndJsonGolden) {
  const auto ints = run_cli({"construct", "--k", "4", "--h", "3", "--format", "ints"});
  ASSERT_EQ(ints.code, kExitOk);
  EXPECT_EQ(ints.out, slurp(kGolden / "construct_k4_h3_ints.txt"));
  const auto json = run_cli({"construct", "--k", "4", "--h", "3", "--format", "json"});
  ASSERT_EQ(json.code, kExitOk);
  EXPECT_EQ(json.out, slurp(kGolden / "construct_k4_h3.json"));
}

TEST(CliConstruct, LeaperKnight) {
  const auto r = run_cli({"construct", "--leaper", "knight", "--k", "6"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = parse_document(r.out);
  EXPECT_EQ(doc.h, 5U);
  EXPECT_EQ(doc.cycle.size(), 64U);
  const auto pair = run_cli({"construct", "--a", "2", "--b", "1", "--k", "6"});
  EXPECT_EQ(pair.out, r.out);
}

TEST(CliConstruct, InfeasibleExitsTwo) {
  const auto r = run_cli({"construct", "--k", "4", "--h", "2"});
  EXPECT_EQ(r.code, kExitNegative);
  EXPECT_NE(r.out.find("parity"), std::string::npos);
  const auto alfil = run_cli({"construct", "--leaper", "alfil", "--k", "12"});
  EXPECT_EQ(alfil.code, kExitNegative);
  EXPECT_NE(alfil.out.find("InfeasibleParity"), std::string::npos);
}

TEST(CliConstruct, UsageErrors) {
  EXPECT_EQ(run_cli({"construct", "--h", "3"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"construct", "--k", "5"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"construct", "--k", "5", "--h", "3", "--leaper", "knight"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"construct", "--k", "5", "--h", "3", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"construct", "--k", "5", "--h", "zero"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"construct", "--k", "5", "--h", "0"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"construct", "--k", "5", "--leaper", "bishop"}).code, kExitUsage);
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
  const auto bad = run_cli({"construct", "--k", "5", "--hh", "3"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("--hh"), std::string::npos);
}

TEST(CliConstruct, MaxDimensionFlagAndEnvironment) {
  EXPECT_EQ(run_cli({"construct", "--k", "12", "--h", "3", "--max-k", "10"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"construct", "--k", "12", "--h", "3", "--max-k", "40"}).code, kExitUsage);
  ::setenv("LEAPER_CYCLES_MAX_K", "10", 1);
  EXPECT_EQ(run_cli({"construct", "--k", "12", "--h", "3"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"construct", "--k", "12", "--h", "3", "--max-k", "12"}).code, kExitOk);
  ::setenv("LEAPER_CYCLES_MAX_K", "junk", 1);
  EXPECT_EQ(run_cli({"construct", "--k", "4", "--h", "3"}).code, kExitUsage);
  ::unsetenv("LEAPER_CYCLES_MAX_K");
}

TEST(CliVerify, ValidSwappedAndEmpty) {
  TempDir dir;
  const auto built = run_cli({"construct", "--k", "5", "--h", "3", "--output", dir.file("c.txt").string()});
  ASSERT_EQ(built.code, kExitOk);
  EXPECT_EQ(slurp(dir.file("c.txt")), slurp(kGolden / "construct_k5_h3.txt"));
  EXPECT_EQ(run_cli({"verify", "--h", "3", dir.file("c.txt").string()}).code, kExitOk);

  // Swap the vertex lines at positions 3 and 4 (file lines 5 and 6).
  std::vector<std::string> lines;
  std::istringstream in(slurp(dir.file("c.txt")));
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  std::swap(lines[4], lines[5]);
  std::string swapped;
  for (const auto& l : lines) swapped += l + "\n";
  dir.write("swapped.txt", swapped);
  const auto bad = run_cli({"verify", "--h", "3", dir.file("swapped.txt").string()});
  EXPECT_EQ(bad.code, kExitNegative);
  EXPECT_NE(bad.out.find("WrongStep at 2-3"), std::string::npos) << bad.out;
  EXPECT_NE(bad.out.find("WrongStep at 4-5"), std::string::npos) << bad.out;

  dir.write("empty.txt", "");
  const auto empty = run_cli({"verify", "--h", "3", dir.file("empty.txt").string()});
  EXPECT_EQ(empty.code, kExitUsage);
  EXPECT_NE(empty.err.find("line 1"), std::string::npos);
  EXPECT_EQ(run_cli({"verify", dir.file("missing.txt").string()}).code, kExitUsage);
}

TEST(CliVerify, JsonAndHeaderStep) {
  TempDir dir;
  ASSERT_EQ(run_cli({"construct", "--k", "6", "--h", "5", "--format", "json", "--output", dir.file("c.json").string()})
                .code,
            kExitOk);
  const auto r = run_cli({"verify", dir.file("c.json").string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "valid k=6 h=5 vertices=64\n");
  EXPECT_EQ(run_cli({"verify", "--h", "3", dir.file("c.json").string()}).code, kExitNegative);
}

TEST(CliProperty, ConstructVerifyRoundTrip) {
  TempDir dir;
  for (unsigned k = 2; k <= 12; ++k) {
    for (unsigned h = 1; h < k; h += 2) {
      for (const char* format : {"tuples", "ints", "json"}) {
        const auto path = dir.file("rt.txt").string();
        ASSERT_EQ(run_cli({"construct", "--k", std::to_string(k), "--h", std::to_string(h), "--format", format,
                           "--output", path})
                      .code,
                  kExitOk);
        ASSERT_EQ(run_cli({"verify", "--h", std::to_string(h), path}).code, kExitOk)
            << "k=" << k << " h=" << h << " " << format;
      }
    }
  }
}

TEST(CliOracle, Outputs) {
  const auto witness = run_cli({"oracle", "--k", "4", "--h", "3", "--witness"});
  ASSERT_EQ(witness.code, kExitOk);
  EXPECT_EQ(witness.out.substr(0, witness.out.find('\n')), "k=4 h=3 exists=true nodes_explored=16");
  EXPECT_NE(witness.out.find("witness verified=true"), std::string::npos);
  const auto doc = parse_document(witness.out.substr(witness.out.find('#')));
  EXPECT_EQ(doc.cycle.size(), 16U);

  const auto none = run_cli({"oracle", "--k", "5", "--h", "4"});
  EXPECT_EQ(none.code, kExitNegative);
  EXPECT_EQ(none.out, "k=5 h=4 exists=false nodes_explored=1\n");

  const auto count = run_cli({"oracle", "--k", "3", "--h", "1", "--count", "--threads", "2"});
  EXPECT_EQ(count.code, kExitOk);
  EXPECT_NE(count.out.find("count=6"), std::string::npos);

  const auto cap = run_cli({"oracle", "--k", "13", "--h", "1"});
  EXPECT_EQ(cap.code, kExitUsage);
  EXPECT_NE(cap.err.find("limit 12"), std::string::npos);
}

TEST(CliLeaper, Outputs) {
  const auto three = run_cli({"leaper", "--name", "threeleaper"});
  EXPECT_EQ(three.code, kExitOk);
  EXPECT_EQ(three.out.substr(0, three.out.find('\n')), "leaper=threeleaper a=0 b=3 h=9 min_k=10");

  const auto alfil = run_cli({"leaper", "--name", "alfil"});
  EXPECT_EQ(alfil.code, kExitNegative);
  EXPECT_NE(alfil.out.find("min_k=never"), std::string::npos);
  EXPECT_NE(alfil.out.find("parity"), std::string::npos);

  const auto knight5 = run_cli({"leaper", "--a", "1", "--b", "2", "--k", "5"});
  EXPECT_EQ(knight5.code, kExitNegative);
  EXPECT_NE(knight5.out.find("InfeasibleRange"), std::string::npos);
  EXPECT_NE(knight5.out.find("k > a^2+b^2 = 5"), std::string::npos);

  EXPECT_EQ(run_cli({"leaper", "--leaper", "knight", "--k", "6"}).code, kExitOk);
  EXPECT_EQ(run_cli({"leaper", "--name", "bishop"}).code, kExitUsage);
  EXPECT_NE(run_cli({"leaper", "--name", "bishop"}).err.find("wazir"), std::string::npos);

  const auto table = run_cli({"leaper"});
  EXPECT_EQ(table.code, kExitOk);
  EXPECT_EQ(table.out, slurp(kGolden / "leaper_catalog.txt"));
}

}  // namespace
}  // namespace leapcycles::cli
