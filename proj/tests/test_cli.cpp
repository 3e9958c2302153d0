// Copyright 2026 The Monoidlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <catch_amalgamated.hpp>

#include <filesystem>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"
#include "monoidlab/families.hpp"
#include "monoidlab/mon_format.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;

  bool has(const std::string& line) const { return ("\n" + out).find("\n" + line + "\n") != std::string::npos; }
};

Outcome run(std::initializer_list<std::string> args) {
  std::vector<std::string> storage{"monoidlab"};
  storage.insert(storage.end(), args);
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  std::ostringstream out, err;
  const int code = monoidlab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("monoidlab-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    monoidlab::write_text_file(dir_ / name, text);
    return path(name);
  }

 private:
  fs::path dir_;
};

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"classify"}).code == 2);
  CHECK(run({"classify", "/nonexistent/file.mon"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("families and classify") {
  Scratch s;
  const auto t1 = s.path("t1.mon");
  auto r = run({"families", "table1", "-o", t1});
  REQUIRE(r.code == 0);
  CHECK(r.has("size=6"));
  r = run({"classify", t1});
  CHECK(r.code == 0);
  CHECK(r.has("ramsey=true"));
  CHECK(r.has("y_controllable=Yes(XR-linear)"));
  CHECK(run({"classify", t1, "--expect", "ramsey", "--expect", "aperiodic"}).code == 0);
  r = run({"classify", t1, "--expect", "not-ramsey"});
  CHECK(r.code == 1);
  CHECK(r.has("expect.not-ramsey=mismatch"));
  CHECK(run({"classify", t1, "--expect", "purple"}).code == 2);

  const auto c3 = s.path("c3.mon");
  REQUIRE(run({"families", "cyclic", "3", "-o", c3}).code == 0);
  r = run({"classify", c3});
  CHECK(r.has("y_controllable=No(not-aperiodic)"));
  CHECK(r.has("witness.aperiodic=g"));
  CHECK(run({"families", "carlson", "2"}).code == 2);
  CHECK(run({"families", "list"}).out.find("i_monoid\n") != std::string::npos);
  CHECK(run({"families", "gowers", "2"}).out == monoidlab::format_mon(monoidlab::gowers(2)));
}

TEST_CASE("green and yspace") {
  Scratch s;
  const auto g2 = s.write("g2.mon", monoidlab::format_mon(monoidlab::gowers(2)));
  auto r = run({"green", g2});
  CHECK(r.code == 0);
  CHECK(r.has("r_classes={0} {1}"));
  CHECK(r.has("leq_r.1={0,1}"));
  CHECK(r.has("x_linear=true"));
  r = run({"yspace", g2, "--confluence"});
  CHECK(r.code == 0);
  CHECK(r.has("y_size=3"));
  CHECK(r.has("confluent=true"));
  r = run({"yspace", g2, "--wedge", "1,0"});
  CHECK(r.has("wedge={{1},{0,1}}"));
  CHECK(run({"yspace", g2, "--wedge", "1", "--y", "min"}).code == 2);
}

TEST_CASE("dynamics") {
  Scratch s;
  const auto t1 = s.write("t1.mon", monoidlab::format_mon(monoidlab::table1()));
  auto r = run({"dynamics", t1});
  CHECK(r.code == 0);
  CHECK(r.has("postcondition=ok"));
  CHECK(r.has("class_images_agree=true"));
  r = run({"dynamics", t1, "--action", "words:2"});
  CHECK(r.code == 0);
  CHECK(r.has("space_size=43"));
  const auto c2 = s.write("c2.mon", monoidlab::format_mon(monoidlab::cyclic(2)));
  CHECK(run({"dynamics", c2}).code == 2);

  const auto g2 = s.write("g2.mon", monoidlab::format_mon(monoidlab::gowers(2)));
  const auto u = s.write("u.mon", "elements: p q\ntable:\np q\np q\n");
  const auto act = s.write("u.act", "0 p -> p\n0 q -> q\n1 p -> q\n1 q -> q\n");
  r = run({"dynamics", g2, u, "--action", act});
  CHECK(r.code == 0);
  CHECK(r.has("postcondition=ok"));
  CHECK(r.has("kernel_size=2"));
}

TEST_CASE("adversarial and search") {
  Scratch s;
  const auto c2 = s.write("c2.mon", monoidlab::format_mon(monoidlab::cyclic(2)));
  auto r = run({"adversarial", c2, "--element", "g", "--maxlen", "5"});
  CHECK(r.code == 0);
  CHECK(r.has("verified=true"));
  CHECK(run({"adversarial", c2, "--element", "1"}).code == 2);

  const auto g2 = s.write("g2.mon", monoidlab::format_mon(monoidlab::gowers(2)));
  const auto colors = s.write("parity.col",
                              "0 even\n1 odd\n0,0 even\n0,1 odd\n1,0 odd\n1,1 even\n"
                              "0,0,0 even\n0,0,1 odd\n0,1,0 odd\n0,1,1 even\n"
                              "1,0,0 odd\n1,0,1 even\n1,1,0 even\n1,1,1 odd\n");
  r = run({"search", g2, "--coloring", "file:" + colors, "--maxlen", "3"});
  CHECK(r.code == 0);
  CHECK(r.has("y0=0,0"));
  CHECK(r.has("y1=0"));
  r = run({"search", g2, "--coloring", "file:" + colors, "--maxlen", "2", "--expect", "absent"});
  CHECK(r.code == 0);
  CHECK(r.has("found=false"));
  CHECK(run({"search", c2, "--coloring", "first-in:1,g", "--maxlen", "4"}).code == 1);
}

TEST_CASE("syntactic and iso") {
  Scratch s;
  const auto out = s.path("s.mon");
  auto r = run({"syntactic", "--regex", "(g|h)*h|(g|h)*a(g|h)*g|(a|g|h)*a(a|g|h)*a(a|g|h)*",
                "--alphabet", "agh", "--emit", out, "--emit-dfa", s.path("s.dfa")});
  REQUIRE(r.code == 0);
  CHECK(r.has("monoid_size=6"));
  CHECK(r.has("star_free=true"));
  const auto t1 = s.write("t1.mon", monoidlab::format_mon(monoidlab::table1()));
  r = run({"iso", out, t1});
  CHECK(r.code == 0);
  CHECK(r.has("isomorphic=true"));
  r = run({"syntactic", "--dfa", s.path("s.dfa")});
  CHECK(r.has("monoid_size=6"));
  CHECK(run({"syntactic", "--regex", "(aa)*", "--alphabet", "a"}).out.find("star_free=false") !=
        std::string::npos);
  CHECK(run({"syntactic", "--regex", "a(", "--alphabet", "a"}).code == 2);
  const auto g3 = s.write("g3.mon", monoidlab::format_mon(monoidlab::gowers(3)));
  const auto c3 = s.write("c3.mon", monoidlab::format_mon(monoidlab::cyclic(3)));
  CHECK(run({"iso", g3, c3}).code == 1);
}

TEST_CASE("corpus") {
  Scratch s;
  const auto dir = s.path("corpus");
  auto r = run({"corpus", "--seed", "3", "--count", "10", "--emit", dir});
  CHECK(r.code == 0);
  CHECK(r.has("status=ok"));
  CHECK(r.out.find("invariant.aperiodicity_agreement=") != std::string::npos);
  CHECK(fs::exists(fs::path(dir) / "corpus-000.mon"));
}
