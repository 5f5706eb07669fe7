// Copyright 2026 The Balanced Codes Authors
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

// balcodec: balanced-code stream encoder/decoder and redundancy tables.
//
//   balcodec encode --scheme proposed-fl --k 16 [--pad] IN OUT
//   balcodec decode IN OUT
//   balcodec tables --what table1 [--k-list 4,8,16]
//   balcodec selfcheck --k-max 8

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "balanced/analytics.hpp"
#include "balanced/errors.hpp"
#include "balanced/framing.hpp"
#include "balanced/selfcheck.hpp"
#include "balanced/subset_codec.hpp"

namespace {

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path,
                const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot create " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balanced-code codec and redundancy tables"};
  app.require_subcommand(1);

  std::map<std::string, balanced::Scheme> schemes;
  for (auto s : balanced::kAllSchemes) {
    schemes.emplace(std::string(balanced::scheme_name(s)), s);
  }

  auto* encode = app.add_subcommand("encode", "Frame a file as balanced packets");
  balanced::Scheme scheme = balanced::Scheme::kProposedFL;
  std::size_t k = 16;
  bool pad = false;
  std::string enc_in, enc_out;
  encode->add_option("--scheme", scheme, "Balancing scheme")
      ->required()
      ->transform(CLI::CheckedTransformer(schemes, CLI::ignore_case));
  encode->add_option("--k", k, "Block length in bits (even, >= 4)")
      ->required();
  encode->add_flag("--pad", pad, "Zero-fill the final partial block");
  encode->add_option("IN", enc_in, "Input file")->required();
  encode->add_option("OUT", enc_out, "Output stream")->required();

  auto* decode = app.add_subcommand("decode", "Recover a file from a stream");
  std::string dec_in, dec_out;
  decode->add_option("IN", dec_in, "Input stream")->required();
  decode->add_option("OUT", dec_out, "Output file")->required();

  auto* tables = app.add_subcommand("tables", "Emit analytics as CSV");
  std::string what = "table1";
  std::vector<std::size_t> k_list(balanced::kTable1BlockLengths.begin(),
                                  balanced::kTable1BlockLengths.end());
  tables->add_option("--what", what, "table1 | nlambda | fig2 | fig3")
      ->check(CLI::IsMember({"table1", "nlambda", "fig2", "fig3"}));
  tables->add_option("--k-list", k_list, "Block lengths")->delimiter(',');

  auto* check = app.add_subcommand("selfcheck", "Run exhaustive invariants");
  std::size_t k_max = 8;
  check->add_option("--k-max", k_max, "Largest block length checked")
      ->check(CLI::Range(std::size_t{4}, balanced::kSelfCheckMaxK));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*encode) {
      const auto bytes = read_file(enc_in);
      const auto bits = balanced::unpack_bits(bytes, bytes.size() * 8);
      write_file(enc_out, balanced::frame_stream(bits, k, scheme, pad));
    } else if (*decode) {
      const auto bits = balanced::deframe_stream(read_file(dec_in));
      if (bits.size() % 8 != 0) {
        throw std::runtime_error("decoded bit count is not whole bytes");
      }
      write_file(dec_out, balanced::pack_bits(bits));
    } else if (*tables) {
      if (what == "table1") {
        balanced::write_table1_csv(std::cout, k_list);
      } else if (what == "nlambda") {
        balanced::write_nlambda_csv(std::cout, k_list);
      } else if (what == "fig2") {
        balanced::write_fig2_csv(std::cout, k_list);
      } else {
        balanced::write_fig3_csv(std::cout, k_list);
      }
    } else if (*check) {
      const auto report = balanced::selfcheck(k_max);
      balanced::print_report(std::cout, report);
      return report.passed() ? 0 : 1;
    }
  } catch (const balanced::StreamCorruptError& e) {
    std::cerr << "balcodec: stream corrupt: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "balcodec: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
