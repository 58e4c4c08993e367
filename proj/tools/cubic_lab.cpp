// Copyright 2026 The Cubic Lab Authors
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

// cubic_lab: batch front end over the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cubiclab/cubiclab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 1;
constexpr int kExitInternal = 2;

struct Failure {
  int code;
  std::string message;
};

void check(cl_status s) {
  if (s == CL_OK) return;
  throw Failure{s == CL_PRECONDITION ? kExitPrecondition : kExitInternal, cl_last_error()};
}

[[noreturn]] void usage(const std::string& message) { throw Failure{kExitPrecondition, message}; }

// Owns a string handed out by the library.
class Owned {
 public:
  Owned() = default;
  Owned(const Owned&) = delete;
  Owned& operator=(const Owned&) = delete;
  ~Owned() { cl_string_free(p_); }
  char** out() { return &p_; }
  std::string str() const { return p_ == nullptr ? std::string() : std::string(p_); }

 private:
  char* p_ = nullptr;
};

class Corpus {
 public:
  explicit Corpus(const std::string& text) { check(cl_parse_corpus(text.c_str(), &graphs_, &count_)); }
  Corpus(const Corpus&) = delete;
  Corpus& operator=(const Corpus&) = delete;
  ~Corpus() { cl_graph_array_free(graphs_, count_); }
  std::size_t size() const { return count_; }
  const cl_graph* operator[](std::size_t i) const { return graphs_[i]; }
  const cl_graph* const* data() const { return graphs_; }

 private:
  cl_graph** graphs_ = nullptr;
  std::size_t count_ = 0;
};

struct Job {
  std::optional<int> n;
  std::optional<int> n_min;
  std::optional<int> n_max;
  std::string in;
  std::string out;
  std::string format;
  int jobs = 1;
  std::string orbit_mode = "full";
  std::vector<int> edge;
  int region_size = 0;
};

std::string read_input(const std::string& path) {
  if (path.empty()) usage("--in is required for this subcommand");
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) usage("--in: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const Job& job, const std::string& text) {
  if (job.out.empty() || job.out == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(job.out, std::ios::binary | std::ios::trunc);
  if (!f) usage("--out: cannot create '" + job.out + "'");
  f << text;
  if (!f) usage("--out: write to '" + job.out + "' failed");
}

std::string pick_format(const Job& job, const std::string& subcommand,
                        const std::vector<std::string>& allowed) {
  if (job.format.empty()) return allowed.front();
  for (const auto& a : allowed) {
    if (a == job.format) return a;
  }
  std::string list;
  for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
  usage("--format " + job.format + " is not supported by " + subcommand + " (supported: " + list + ")");
}

cl_orbit_mode orbit_mode(const Job& job) {
  if (job.orbit_mode == "full") return CL_ORBIT_FULL;
  if (job.orbit_mode == "stabilizer") return CL_ORBIT_STABILIZER;
  usage("--orbit-mode must be full or stabilizer, got '" + job.orbit_mode + "'");
}

int require(const std::optional<int>& v, const char* flag) {
  if (!v) usage(std::string(flag) + " is required for this subcommand");
  return *v;
}

std::pair<int, int> range(const Job& job) {
  if (job.n && (job.n_min || job.n_max)) usage("--n cannot be combined with --n-min/--n-max");
  if (job.n) return {*job.n, *job.n};
  return {require(job.n_min, "--n-min"), require(job.n_max, "--n-max")};
}

// JSON array assembled from per-graph JSON documents.
std::string json_array(const std::vector<std::string>& docs) {
  if (docs.empty()) return "[]\n";
  std::string out = "[\n";
  for (std::size_t i = 0; i < docs.size(); ++i) {
    std::string d = docs[i];
    while (!d.empty() && d.back() == '\n') d.pop_back();
    out += d;
    out += i + 1 < docs.size() ? ",\n" : "\n";
  }
  return out + "]\n";
}

template <typename F>
std::string per_graph(const Corpus& corpus, F f) {
  std::vector<std::string> docs;
  for (std::size_t i = 0; i < corpus.size(); ++i) docs.push_back(f(corpus[i]));
  return json_array(docs);
}

int run_enumerate(const Job& job) {
  const auto fmt = pick_format(job, "enumerate", {"graph6", "edgelist"});
  Owned text;
  check(cl_enumerate(require(job.n, "--n"), text.out()));
  if (fmt == "graph6") {
    write_output(job, text.str());
    return kExitOk;
  }
  Corpus corpus(text.str());
  std::string out;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Owned el;
    check(cl_graph_to_edge_list(corpus[i], el.out()));
    out += el.str();
  }
  write_output(job, out);
  return kExitOk;
}

int run_classify(const Job& job) {
  pick_format(job, "classify", {"json"});
  Corpus corpus(read_input(job.in));
  write_output(job, per_graph(corpus, [](const cl_graph* g) {
    Owned s;
    check(cl_classify_json(g, s.out()));
    return s.str();
  }));
  return kExitOk;
}

int run_construct(const Job& job) {
  pick_format(job, "construct", {"json"});
  Corpus corpus(read_input(job.in));
  write_output(job, per_graph(corpus, [](const cl_graph* g) {
    Owned s;
    check(cl_construct_json(g, s.out()));
    return s.str();
  }));
  return kExitOk;
}

int run_insert(const Job& job) {
  const auto fmt = pick_format(job, "insert", {"graph6", "json"});
  const auto mode = orbit_mode(job);
  Corpus corpus(read_input(job.in));
  std::string lines;
  std::vector<std::string> reports;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Owned text, report;
    check(cl_insert(corpus[i], mode, text.out(), report.out()));
    lines += text.str();
    reports.push_back(report.str());
  }
  if (fmt == "json") {
    write_output(job, json_array(reports));
  } else {
    write_output(job, lines);
    // The collision report goes to stderr so the graph6 stream stays clean.
    std::cerr << json_array(reports);
  }
  return kExitOk;
}

int run_reduce(const Job& job) {
  pick_format(job, "reduce", {"json"});
  const auto mode = orbit_mode(job);
  if (!job.edge.empty() && job.edge.size() != 2) usage("--edge takes exactly two vertex ids");
  const int u = job.edge.empty() ? -1 : job.edge[0];
  const int v = job.edge.empty() ? -1 : job.edge[1];
  if (job.region_size < 0) usage("--region-size must be positive");
  Corpus corpus(read_input(job.in));
  write_output(job, per_graph(corpus, [&](const cl_graph* g) {
    Owned s;
    check(cl_reduce_json(g, u, v, mode, job.region_size, s.out()));
    return s.str();
  }));
  return kExitOk;
}

int run_census(const Job& job) {
  const auto fmt = pick_format(job, "census", {"csv", "json"});
  const auto [lo, hi] = range(job);
  Owned s;
  check(cl_census(lo, hi, job.jobs, fmt == "csv" ? CL_FORMAT_CSV : CL_FORMAT_JSON, s.out()));
  write_output(job, s.str());
  return kExitOk;
}

int run_probe(const Job& job) {
  const auto fmt = pick_format(job, "probe", {"csv", "json"});
  const auto [lo, hi] = range(job);
  Owned s;
  check(cl_probe(lo, hi, job.jobs, fmt == "csv" ? CL_FORMAT_CSV : CL_FORMAT_JSON, s.out()));
  write_output(job, s.str());
  return kExitOk;
}

int run_verify(const Job& job) {
  pick_format(job, "verify-lemmas", {"json"});
  const auto mode = orbit_mode(job);
  std::string text;
  if (!job.in.empty()) {
    if (job.n || job.n_min || job.n_max) usage("--in cannot be combined with --n/--n-min/--n-max");
    text = read_input(job.in);
  } else {
    int lo = job.n ? *job.n : job.n_min.value_or(4);
    int hi = job.n ? *job.n : require(job.n_max, "--n-max (or --in)");
    if (job.n && (job.n_min || job.n_max)) usage("--n cannot be combined with --n-min/--n-max");
    if (lo % 2 != 0) ++lo;
    for (int n = lo; n <= hi; n += 2) {
      Owned part;
      check(cl_enumerate(n, part.out()));
      text += part.str();
    }
  }
  Corpus corpus(text);
  Owned report;
  int passed = 0;
  check(cl_verify_lemmas_json(corpus.data(), corpus.size(), mode, job.jobs, report.out(), &passed));
  write_output(job, report.str());
  return passed ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cubic bridge graph laboratory"};
  app.require_subcommand(1);
  Job job;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", job.out, "Output path (stdout when omitted)");
    sub->add_option("--format", job.format, "Output format");
  };
  auto add_range = [&](CLI::App* sub) {
    sub->add_option("--n", job.n, "Single order");
    sub->add_option("--n-min", job.n_min, "Smallest order");
    sub->add_option("--n-max", job.n_max, "Largest order");
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", job.jobs, "Worker threads")->check(CLI::Range(1, 1024));
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--orbit-mode", job.orbit_mode, "Edge orbit mode: full or stabilizer");
  };
  auto add_in = [&](CLI::App* sub) {
    sub->add_option("--in", job.in, "Input corpus: graph6 lines or edge-list blocks ('-' for stdin)");
  };

  auto* enumerate = app.add_subcommand("enumerate", "Connected cubic graphs on n vertices");
  enumerate->add_option("--n", job.n, "Order (even)");
  add_common(enumerate);

  auto* classify = app.add_subcommand("classify", "Connectivity and Hamiltonicity facts");
  add_in(classify);
  add_common(classify);

  auto* construct = app.add_subcommand("construct", "Bridge construction record");
  add_in(construct);
  add_common(construct);

  auto* insert = app.add_subcommand("insert", "Cycle-insertion family");
  add_in(insert);
  add_common(insert);
  add_mode(insert);

  auto* reduce = app.add_subcommand("reduce", "Two-step size reduction");
  add_in(reduce);
  add_common(reduce);
  add_mode(reduce);
  reduce->add_option("--edge", job.edge, "Insertion edge as two ids (default: every family edge)")
      ->expected(2);
  reduce->add_option("--region-size", job.region_size,
                     "Selection size replacing floor(k^(1/5))");

  auto* census = app.add_subcommand("census", "Census table");
  add_range(census);
  add_common(census);
  add_jobs(census);

  auto* probe = app.add_subcommand("probe", "Cardinality probe rows");
  add_range(probe);
  add_common(probe);
  add_jobs(probe);

  auto* verify = app.add_subcommand("verify-lemmas", "Construction checks over a corpus");
  add_in(verify);
  add_range(verify);
  add_common(verify);
  add_jobs(verify);
  add_mode(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }

  try {
    if (*enumerate) return run_enumerate(job);
    if (*classify) return run_classify(job);
    if (*construct) return run_construct(job);
    if (*insert) return run_insert(job);
    if (*reduce) return run_reduce(job);
    if (*census) return run_census(job);
    if (*probe) return run_probe(job);
    if (*verify) return run_verify(job);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }
  return kExitPrecondition;
}
