#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(KANTO_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream(path) << text;
  return path;
}

TEST(CliAnalyze, ExitCodes) {
  EXPECT_EQ(run("analyze " + write_file("kanto_d16.txt", "2\n1 0\n0 6\n")).code, 1);
  EXPECT_EQ(run("analyze " + write_file("kanto_eye2.txt", "2\n1 0\n0 1\n")).code, 0);
  EXPECT_EQ(run("analyze " + write_file("kanto_eye3.json", R"({"n":3,"entries":[1,0,0,0,1,0,0,0,1]})")).code, 0);
  const int gap = run("analyze " + write_file("kanto_gap.txt", "3\n1 0 0\n0 2 0\n0 0 4.5\n")).code;
  EXPECT_TRUE(gap == 2 || gap == 1) << gap;
}

TEST(CliAnalyze, ValidationErrorsExit64) {
  EXPECT_EQ(run("analyze " + write_file("kanto_bad.txt", "2\n1 0\n0\n")).code, 64);
  EXPECT_EQ(run("analyze " + write_file("kanto_indef.txt", "2\n1 2\n2 1\n")).code, 64);
  EXPECT_EQ(run("analyze " + write_file("kanto_asym.txt", "2\n1 0.5\n0 1\n")).code, 64);
  EXPECT_EQ(run("analyze /nonexistent/kanto_matrix.txt").code, 64);
  EXPECT_EQ(run("no-such-command").code, 64);
  EXPECT_EQ(run("").code, 64);
}

TEST(CliAnalyze, HumanAndJsonOutput) {
  const auto path = write_file("kanto_d16b.txt", "2\n1 0\n0 6\n");
  const Result h = run("analyze " + path);
  EXPECT_NE(h.out.find("3+2√2 = 5.82842712474619"), std::string::npos) << h.out;
  EXPECT_NE(h.out.find("2+√3 = 3.73205080756888"), std::string::npos);
  EXPECT_NE(h.out.find("verdict: NotConvex"), std::string::npos);
  EXPECT_NE(h.out.find("certificate: necessary_violated"), std::string::npos);
  const Result j = run("analyze --format json " + path);
  EXPECT_EQ(j.code, 1);
  EXPECT_NE(j.out.find("\"status\": \"NotConvex\""), std::string::npos) << j.out;
}

TEST(CliLemmas, ExitCodes) {
  const Result ok = run("lemmas --grid 3 --ab-grid 5");
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out.rfind("grid,check,omega1,omega2,omega3,alpha,beta,value,passed\n", 0), 0u);
  const Result bad = run("lemmas --grid 5 --ab-grid 5 --omega-max 6");
  EXPECT_NE(bad.code, 0);
  EXPECT_NE(bad.out.find(",false"), std::string::npos);
}

TEST(CliBoundary, DeterministicCsv) {
  const Result a = run("boundary --dims 2 --tol 1e-3 --no-timing");
  const Result b = run("boundary --dims 2 --tol 1e-3 --no-timing");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("family,dim,kappa_lo,kappa_hi,tol,samples,seed,wall_ms\n", 0), 0u);
  EXPECT_EQ(run("boundary --dims 2 --families spiral --tol 1e-2").code, 3);
  EXPECT_EQ(run("boundary --dims 2 --families two_point --profile 0,0.5,1 --tol 1e-2 --budget 0.05").code, 0);
}

TEST(CliLmi, ExitCodes) {
  EXPECT_EQ(run("lmi --dim 2 --delta 6").code, 0);
  EXPECT_EQ(run("lmi --dim 2 --delta 6.2").code, 1);
  EXPECT_EQ(run("lmi --dim 3 --delta 2,2").code, 64);
  EXPECT_EQ(run("lmi --dim 2 --delta 1.5").code, 64);
  EXPECT_EQ(run("lmi --dim 2 --delta abc").code, 64);
  EXPECT_EQ(run("lmi --dim 3 --delta 2.5,3,2.8").code, 0);
}

TEST(CliHessianCheck, RandomAndFile) {
  EXPECT_EQ(run("hessian-check --random 3 --points 20").code, 0);
  EXPECT_EQ(run("hessian-check --points 20").code, 0);
  EXPECT_EQ(run("hessian-check " + write_file("kanto_h.txt", "2\n2 1\n1 3\n") + " --points 10").code, 0);
}

TEST(CliBound, PrintsBothVariants) {
  const Result r = run("bound " + write_file("kanto_d16c.txt", "2\n1 0\n0 6\n") + " --point 1,1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("holds: true"), std::string::npos);
  EXPECT_NE(r.out.find("holds (squares variant): false"), std::string::npos);
  EXPECT_EQ(run("bound " + write_file("kanto_d16d.txt", "2\n1 0\n0 6\n") + " --point 0,0").code, 64);
  EXPECT_EQ(run("bound " + write_file("kanto_d16e.txt", "2\n1 0\n0 6\n") + " --point 1,1,1").code, 64);
}

}  // namespace
