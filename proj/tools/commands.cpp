// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iostream>
#include <thread>
#include <unordered_set>
#include <vector>

#include "CLI11.hpp"
#include "bench.hpp"
#include "image_io.hpp"
#include "policy_json.hpp"
#include "preview.hpp"
#include "textaug/error.hpp"
#include "textaug/registry.hpp"
#include "textaug/rng.hpp"

namespace textaug::cli {

namespace fs = std::filesystem;
using nlohmann::json;

std::uint64_t cmd_apply(const ApplyOptions& opts) {
  if (find_op(opts.op) == nullptr) throw Error(ErrorCode::kUnknownOp, opts.op);
  const Magnitude mag(opts.mag);
  const Image img = read_image(opts.input);
  Rng rng(opts.seed);
  const Image out = apply(opts.op, img, mag, opts.prob, rng);
  write_png(opts.output, out);
  return rng.draws();
}

namespace {

bool is_image(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

std::vector<std::string> collect_inputs(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir.string());
  std::vector<std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file() && is_image(e.path()))
      files.push_back(fs::relative(e.path(), dir).generic_string());
  std::sort(files.begin(), files.end());
  return files;
}

FileRecord process_one(const std::string& rel, const BatchOptions& opts, const PolicyConfig& cfg,
                       std::uint64_t seed) {
  FileRecord rec;
  rec.input = rel;
  rec.output = fs::path(rel).replace_extension(".png").generic_string();
  rec.child_seed = child_seed(seed, rel);
  try {
    const Image img = read_image(opts.input_dir / rel);
    Rng rng(rec.child_seed);
    const Image out = rand_augment(img, cfg, rng, &rec.trace);
    const auto png = encode_png(out);
    write_file(opts.output_dir / rec.output, png);
    rec.sha256 = sha256_hex(png);
  } catch (const std::exception& e) {
    rec.status = "error";
    rec.error = e.what();
    rec.trace.clear();
  }
  return rec;
}

}  // namespace

BatchResult cmd_batch(const BatchOptions& opts) {
  if (opts.workers < 1) throw CliError(kExitInvalid, "--workers must be at least 1");
  std::optional<Manifest> reference;
  PolicySpec policy;
  std::uint64_t seed = opts.seed;
  if (opts.replay) {
    const auto bytes = read_file(*opts.replay);
    const json j = json::parse(bytes.begin(), bytes.end(), nullptr, false);
    if (j.is_discarded()) throw CliError(kExitInvalid, "malformed manifest " + opts.replay->string());
    reference = manifest_from_json(j);
    policy = policy_from_json(reference->policy);
    seed = reference->seed;
  } else {
    policy = resolve_policy(opts.policy);
  }

  const auto files = collect_inputs(opts.input_dir);
  if (files.empty()) throw CliError(kExitInvalid, "no PNG or JPEG files under " + opts.input_dir.string());
  std::unordered_set<std::string> outputs;
  for (const auto& f : files)
    if (!outputs.insert(fs::path(f).replace_extension(".png").generic_string()).second)
      throw CliError(kExitInvalid, "two inputs map to the same output name: " + f);

  BatchResult result;
  result.manifest.seed = seed;
  result.manifest.policy = policy.json;
  result.manifest.files.resize(files.size());

  // Records land in their input slot, so completion order never matters.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++)
      result.manifest.files[i] = process_one(files[i], opts, policy.config, seed);
  };
  const int n = std::min<int>(opts.workers, static_cast<int>(files.size()));
  std::vector<std::jthread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  for (const auto& f : result.manifest.files) result.failures += f.status == "ok" ? 0 : 1;
  if (reference) {
    for (const auto& f : result.manifest.files) {
      const auto it = std::find_if(reference->files.begin(), reference->files.end(),
                                   [&](const FileRecord& r) { return r.input == f.input; });
      if (it == reference->files.end() || it->sha256 != f.sha256 || it->trace != f.trace) ++result.mismatches;
    }
    for (const auto& r : reference->files)
      if (std::find(files.begin(), files.end(), r.input) == files.end()) ++result.mismatches;
  }

  const std::string text = serialize(result.manifest);
  result.manifest_sha256 = sha256_hex(text);
  write_file(opts.output_dir / "manifest.json",
             std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
  return result;
}

void cmd_list(bool as_json, std::ostream& out) {
  if (as_json) {
    json ops = json::array();
    for (const auto& op : registry_list())
      ops.push_back({{"name", op.name}, {"group", to_string(op.group)}, {"levels_supported", op.levels_supported}});
    out << json{{"schema", 1}, {"ops", ops}}.dump(2) << "\n";
    return;
  }
  for (const auto& op : registry_list())
    out << op.name << "\t" << to_string(op.group) << "\t" << op.levels_supported << "\n";
}

void cmd_preview(const fs::path& input, const fs::path& output, std::uint64_t seed) {
  write_png(output, make_preview(read_image(input), seed));
}

int exit_code_for(std::exception_ptr e, std::ostream& err) {
  try {
    std::rethrow_exception(e);
  } catch (const CliError& x) {
    err << "error: " << x.what() << "\n";
    return x.code();
  } catch (const IoError& x) {
    err << "error: " << x.what() << "\n";
    return kExitIo;
  } catch (const Error& x) {
    err << "error: " << x.what() << "\n";
    switch (x.code()) {
      case ErrorCode::kUnknownOp: return kExitUnknownOp;
      case ErrorCode::kCodecFailure: return kExitIo;
      default: return kExitInvalid;
    }
  } catch (const fs::filesystem_error& x) {
    err << "error: " << x.what() << "\n";
    return kExitIo;
  } catch (const std::exception& x) {
    err << "error: " << x.what() << "\n";
    return kExitInvalid;
  }
}

namespace {

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnv);
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const auto v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw CliError(kExitInvalid, std::string(kSeedEnv) + " is not an unsigned integer");
  return v;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Scene-text image augmentation"};
  app.require_subcommand(1);
  std::optional<std::uint64_t> seed;

  ApplyOptions apply_opts;
  auto* apply_cmd = app.add_subcommand("apply", "Apply one op to one image");
  apply_cmd->add_option("--op", apply_opts.op, "Op name")->required();
  apply_cmd->add_option("--mag", apply_opts.mag, "Magnitude 0, 1 or 2");
  apply_cmd->add_option("--prob", apply_opts.prob, "Application probability");
  apply_cmd->add_option("--seed", seed, std::string("Seed (default $") + kSeedEnv + " or 0)");
  apply_cmd->add_option("--input", apply_opts.input)->required();
  apply_cmd->add_option("--output", apply_opts.output)->required();

  BatchOptions batch_opts;
  std::string replay;
  auto* batch_cmd = app.add_subcommand("batch", "Augment a directory with a policy");
  batch_cmd->add_option("--policy", batch_opts.policy, "Preset name or policy JSON file");
  batch_cmd->add_option("--input-dir", batch_opts.input_dir)->required();
  batch_cmd->add_option("--output-dir", batch_opts.output_dir)->required();
  batch_cmd->add_option("--seed", seed, std::string("Master seed (default $") + kSeedEnv + " or 0)");
  batch_cmd->add_option("--workers", batch_opts.workers, "Worker threads");
  batch_cmd->add_option("--replay", replay, "Re-run a manifest and verify every output");

  std::string list_format = "text";
  auto* list_cmd = app.add_subcommand("list", "List registered ops");
  list_cmd->add_option("--format", list_format)->check(CLI::IsMember({"text", "json"}));

  std::string preview_in, preview_out;
  auto* preview_cmd = app.add_subcommand("preview", "Contact sheet of every op at magnitude 2");
  preview_cmd->add_option("--input", preview_in)->required();
  preview_cmd->add_option("--output", preview_out)->required();
  preview_cmd->add_option("--seed", seed);

  BenchOptions bench_opts;
  auto* bench_cmd = app.add_subcommand("bench", "Single-threaded throughput report (JSON)");
  bench_cmd->add_option("--width", bench_opts.width);
  bench_cmd->add_option("--height", bench_opts.height);
  bench_cmd->add_option("--channels", bench_opts.channels);
  bench_cmd->add_option("--iterations", bench_opts.iterations);
  bench_cmd->add_flag("--sweep", bench_opts.sweep, "Add an N-sweep per preset");
  bench_cmd->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalid;
  }

  try {
    const std::uint64_t s = seed ? *seed : default_seed();
    if (*apply_cmd) {
      apply_opts.seed = s;
      const std::uint64_t draws = cmd_apply(apply_opts);
      std::cout << "draws: " << draws << "\n";
    } else if (*batch_cmd) {
      batch_opts.seed = s;
      if (!replay.empty()) batch_opts.replay = replay;
      if (batch_opts.policy.empty() && !batch_opts.replay)
        throw CliError(kExitInvalid, "batch needs --policy or --replay");
      const BatchResult r = cmd_batch(batch_opts);
      std::cout << "files: " << r.manifest.files.size() << "\nfailures: " << r.failures << "\n";
      if (batch_opts.replay) std::cout << "mismatches: " << r.mismatches << "\n";
      std::cout << "manifest sha256: " << r.manifest_sha256 << "\n";
      if (r.failures > 0 || r.mismatches > 0) return kExitPartial;
    } else if (*list_cmd) {
      cmd_list(list_format == "json", std::cout);
    } else if (*preview_cmd) {
      cmd_preview(preview_in, preview_out, s);
    } else if (*bench_cmd) {
      bench_opts.seed = s;
      std::cout << run_bench(bench_opts).dump(2) << "\n";
    }
  } catch (...) {
    return exit_code_for(std::current_exception(), std::cerr);
  }
  return kExitOk;
}

}  // namespace textaug::cli
