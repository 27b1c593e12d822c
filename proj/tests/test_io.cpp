// Copyright 2026 The gqn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstring>
#include <filesystem>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "gqn/io.hpp"
#include "gqn/networks.hpp"
#include "oracles.hpp"

namespace gqn {
namespace {

namespace fs = std::filesystem;

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "gqn_test_io";
  fs::create_directories(dir);
  return dir / name;
}

bool bit_equal(const Matrix& a, const Matrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         std::memcmp(a.data(), b.data(), sizeof(double) * a.size()) == 0;
}

ErrorKind parse_kind(const std::string& text, std::string* message = nullptr) {
  try {
    parse_state(text);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.kind();
  }
  ADD_FAILURE() << "parsed without error";
  return ErrorKind::InvalidArgument;
}

TEST(StateIo, VacuumRoundTrip) {
  const auto topo = NetworkTopology::star(2);
  StateDocument doc{PartitionedState(CovarianceMatrix::identity(4), topo.partition()),
                    {{"topology", "star"}}};
  const fs::path path = temp_file("vacuum.json");
  write_state(doc, path);
  const ReadResult back = read_state(path);
  EXPECT_EQ(back.document.state.cm().matrix(), Matrix(Matrix::Identity(8, 8)));
  EXPECT_FALSE(back.unphysical_warning);
  EXPECT_TRUE(back.validation.pure);
  EXPECT_EQ(back.document.metadata["topology"], "star");
  EXPECT_EQ(back.document.state.partition().party(0).label, "A1");
  EXPECT_EQ(back.document.state.partition().party(0).modes,
            (std::vector<std::size_t>{0, 1}));
}

TEST(StateIo, AssembledStarBitExact) {
  const auto topo = NetworkTopology::star(3);
  const std::vector<TwoModeSource> src{{0.4, 1.0}, {0.7, 1.1}, {1.0, 1.0}};
  StateDocument doc{assemble(topo, src, random_locals(topo, 1.0, 3)), {}};
  const ReadResult back = parse_state(dump_state(doc));
  EXPECT_TRUE(bit_equal(back.document.state.cm().matrix(), doc.state.cm().matrix()));
}

TEST(StateIo, RandomDocumentsRoundTripBitExactly) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    const std::size_t m = 1 + rng() % 8;
    Matrix v = oracle::random_state(m, 1.5, 3.0, rng());
    std::vector<std::size_t> sizes(m, 1);
    StateDocument doc{PartitionedState(CovarianceMatrix(v), ModePartition::from_sizes(sizes)),
                      {{"seed", k}}};
    const fs::path path = temp_file("random.json");
    write_state(doc, path);
    const ReadResult back = read_state(path);
    ASSERT_TRUE(bit_equal(back.document.state.cm().matrix(), v)) << k;
    EXPECT_EQ(dump_state(back.document), dump_state(doc));
  }
}

TEST(StateIo, ExtremeDoublesRoundTrip) {
  Matrix v = Matrix::Identity(2, 2);
  v(0, 0) = 1.0000000000000002;
  v(1, 1) = 1e300;
  v(0, 1) = v(1, 0) = 5e-324;
  StateDocument doc{PartitionedState(CovarianceMatrix(v),
                                     ModePartition::from_sizes(std::vector<std::size_t>{1})),
                    {}};
  EXPECT_TRUE(bit_equal(parse_state(dump_state(doc)).document.state.cm().matrix(), v));
}

TEST(StateIo, WrongDimensionIsParseError) {
  const std::string text = R"({"format_version":1,"modes":2,
    "matrix":[[1,0],[0,1]],
    "partition":[{"label":"A","mode_indices":[0,1]}]})";
  std::string message;
  EXPECT_EQ(parse_kind(text, &message), ErrorKind::Parse);
  EXPECT_NE(message.find("/matrix"), std::string::npos) << message;
}

TEST(StateIo, ParseErrorsCarryPointers) {
  std::string message;
  EXPECT_EQ(parse_kind("not json"), ErrorKind::Parse);
  EXPECT_EQ(parse_kind(R"({"modes":1})", &message), ErrorKind::Parse);
  EXPECT_NE(message.find("/format_version"), std::string::npos);
  EXPECT_EQ(parse_kind(R"({"format_version":2,"modes":1,"matrix":[[1,0],[0,1]],"partition":[]})",
                       &message),
            ErrorKind::Parse);
  EXPECT_EQ(parse_kind(R"({"format_version":1,"modes":1,"matrix":[[1,0],[0,"x"]],
    "partition":[{"label":"A","mode_indices":[0]}]})",
                       &message),
            ErrorKind::Parse);
  EXPECT_NE(message.find("/matrix/1/1"), std::string::npos) << message;
  EXPECT_EQ(parse_kind(R"({"format_version":1,"modes":1,"matrix":[[1,0],[0,1]],
    "partition":[{"label":"A","mode_indices":[3]}]})",
                       &message),
            ErrorKind::Parse);
  EXPECT_NE(message.find("/partition"), std::string::npos) << message;
}

TEST(StateIo, UnphysicalWarningAndStrict) {
  const std::string text = R"({"format_version":1,"modes":1,"matrix":[[0.5,0],[0,0.5]],
    "partition":[{"label":"A","mode_indices":[0]}]})";
  const ReadResult lax = parse_state(text);
  EXPECT_TRUE(lax.unphysical_warning);
  EXPECT_FALSE(lax.validation.physical);
  EXPECT_THROW(parse_state(text, kDefaultPhysicalityTol, true), Error);
}

TEST(ScanCsv, HeaderAndRows) {
  std::vector<ScanRow> rows{{1.0, 0.0, {0.0, -0.5}, 1.0, 1.0},
                            {1.5, 0.25, {0.1, 0.2}, 1.0, 1.0000000000000002}};
  std::ostringstream out;
  write_scan_csv(out, rows);
  EXPECT_EQ(out.str(),
            "b,I,residual_1,residual_2,v_minus,v_plus\n"
            "1,0,0,-0.5,1,1\n"
            "1.5,0.25,0.10000000000000001,0.20000000000000001,1,1.0000000000000002\n");
}

TEST(ScanCsv, FormatIsLossless) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int k = 0; k < 1000; ++k) {
    const double x = u(rng);
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
}

}  // namespace
}  // namespace gqn
