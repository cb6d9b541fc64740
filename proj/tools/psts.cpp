// psts: command-line front end for the configuration library.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "psts/analysis.hpp"
#include "psts/constructions.hpp"
#include "psts/error.hpp"
#include "psts/io.hpp"
#include "psts/isomorphism.hpp"
#include "psts/transforms.hpp"
#include "psts/verify.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace psts;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  return read_text_file(path);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
  } else {
    write_text_file(path, text);
  }
}

Configuration load(const std::string& path) { return parse_config(read_input(path)); }

std::size_t default_order(const Configuration& config) {
  auto n = maximal_subgraph_order(config);
  if (!n) throw Error(ErrorCode::NotBinomial, "cannot infer the subgraph order; pass --order");
  return *n;
}

std::string join(const std::vector<std::string>& items, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string label_list(const Configuration& config, std::span<const PointIndex> points) {
  std::vector<std::string> out;
  for (PointIndex p : points) out.push_back(config.label(p));
  return join(out);
}

std::string line_text(const Configuration& config, LineIndex l) {
  const Triple& t = config.line(l);
  return config.label(t[0]) + " " + config.label(t[1]) + " " + config.label(t[2]);
}

json record(const std::string& property, json n, json m, json entries, json failures, json witness_file) {
  return json{{"property", property}, {"n", n},           {"m", m},
              {"entries", entries},   {"failures", failures}, {"witness_file", witness_file}};
}

void write_json(const std::string& path, const json& doc) {
  if (!path.empty()) write_output(path, doc.dump(2) + "\n");
}

std::vector<std::string> split_list(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const std::string& item : raw) {
    std::string token;
    for (char c : item) {
      if (c == ',' || c == ' ') {
        if (!token.empty()) out.push_back(token);
        token.clear();
      } else {
        token += c;
      }
    }
    if (!token.empty()) out.push_back(token);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binomial partial Steiner triple systems and their freely contained complete graphs"};
  app.require_subcommand(1);

  std::string in, out;
  auto add_in = [&](CLI::App* cmd) { cmd->add_option("--in", in, "input configuration (default stdin)"); };
  auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", out, "output path (default stdout)"); };

  // construct
  auto* construct = app.add_subcommand("construct", "build a configuration");
  construct->require_subcommand(1);
  std::size_t size_arg = 0;
  auto* c_grass = construct->add_subcommand("grassmannian", "combinatorial Grassmannian G(n,2)");
  c_grass->add_option("n", size_arg)->required();
  add_out(c_grass);
  auto* c_ver = construct->add_subcommand("veronesian", "combinatorial Veronesian V(3,k)");
  c_ver->add_option("k", size_arg)->required();
  add_out(c_ver);
  std::string spec_path;
  auto* c_persp = construct->add_subcommand("perspective", "system of perspective simplices");
  c_persp->add_option("--spec", spec_path, "perspective data file")->required();
  add_out(c_persp);
  std::vector<std::string> x_tokens;
  std::string base_path, mu_path, mu2_path;
  auto* c_attach = construct->add_subcommand("attach", "attach a complete graph along a labelling");
  c_attach->add_option("--x", x_tokens, "vertex labels")->required()->delimiter(',');
  c_attach->add_option("--base", base_path)->required();
  c_attach->add_option("--mu", mu_path)->required();
  add_out(c_attach);
  auto* c_two = construct->add_subcommand("two-graph", "two complete graphs over a common base");
  c_two->add_option("--x", x_tokens, "vertex labels")->required()->delimiter(',');
  c_two->add_option("--base", base_path)->required();
  c_two->add_option("--mu1", mu_path)->required();
  c_two->add_option("--mu2", mu2_path)->required();
  add_out(c_two);

  // transform
  auto* transform = app.add_subcommand("transform", "extend or swap");
  transform->require_subcommand(1);
  auto* t_extend = transform->add_subcommand("extend", "add one maximal complete subgraph, raising the index");
  add_in(t_extend);
  add_out(t_extend);
  std::string cert_path, cert_out;
  bool list_only = false;
  auto* t_swap = transform->add_subcommand("swap", "replace two sides to destroy both maximal complete subgraphs");
  add_in(t_swap);
  add_out(t_swap);
  t_swap->add_option("--certificate", cert_path, "apply this certificate instead of the first candidate");
  t_swap->add_option("--cert-out", cert_out, "write the applied certificate here");
  t_swap->add_flag("--list", list_only, "print all admissible certificates and stop");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "inspect a configuration");
  analyze->require_subcommand(1);
  std::optional<std::size_t> order;
  auto* a_sub = analyze->add_subcommand("subgraphs", "enumerate freely contained complete graphs");
  a_sub->add_option("--order", order);
  add_in(a_sub);
  add_out(a_sub);
  std::vector<std::string> vertex_tokens;
  auto* a_comp = analyze->add_subcommand("complement", "complement of a maximal complete subgraph");
  add_in(a_comp);
  add_out(a_comp);
  a_comp->add_option("--vertices", vertex_tokens)->required();
  auto* a_struct = analyze->add_subcommand("structure", "structure report of the maximal complete subgraphs");
  add_in(a_struct);
  add_out(a_struct);
  std::string axis_out;
  auto* a_dec = analyze->add_subcommand("decompose", "read as a system of perspective simplices");
  add_in(a_dec);
  add_out(a_dec);
  a_dec->add_option("--axis-out", axis_out, "axis configuration path (default <out>.axis)");

  // iso
  std::string iso_a, iso_b;
  bool emit_cert = false;
  auto* iso = app.add_subcommand("iso", "isomorphism test");
  iso->add_option("fileA", iso_a)->required();
  iso->add_option("fileB", iso_b)->required();
  iso->add_flag("--emit-cert", emit_cert, "print digests and canonical triples");

  // verify
  auto* verify = app.add_subcommand("verify", "property battery and existence corpus");
  verify->require_subcommand(1);
  std::size_t n_max = 0, n_arg = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string json_path, out_dir;
  auto* v_bat = verify->add_subcommand("battery", "check every invariant over the corpus");
  v_bat->add_option("--n-max", n_max)->required();
  v_bat->add_option("--seed", seed);
  v_bat->add_option("--json", json_path);
  auto* v_ex = verify->add_subcommand("existence", "one witness per admissible count");
  v_ex->add_option("--n", n_arg)->required();
  v_ex->add_option("--out-dir", out_dir, "write each witness configuration here");
  v_ex->add_option("--json", json_path);

  // classify
  auto* classify = app.add_subcommand("classify", "censuses");
  classify->require_subcommand(1);
  auto* cl_veb = classify->add_subcommand("veblen-labellings", "all 720 attachments of K_4 to the Veblen configuration");
  cl_veb->add_option("--json", json_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_grass->parsed()) {
      write_output(out, emit_config(grassmannian(size_arg)));
    } else if (c_ver->parsed()) {
      write_output(out, emit_config(veronesian(size_arg)));
    } else if (c_persp->parsed()) {
      write_output(out, emit_config(perspective_system(read_perspective_file(spec_path))));
    } else if (c_attach->parsed()) {
      const Configuration base = load(base_path);
      const Labelling mu = parse_labelling(read_text_file(mu_path), x_tokens);
      write_output(out, emit_config(attach_complete(x_tokens, mu, base)));
    } else if (c_two->parsed()) {
      const Configuration base = load(base_path);
      const Labelling mu1 = parse_labelling(read_text_file(mu_path), x_tokens);
      const Labelling mu2 = parse_labelling(read_text_file(mu2_path), x_tokens);
      write_output(out, emit_config(two_graph_example(base, x_tokens, mu1, mu2)));
    } else if (t_extend->parsed()) {
      const Configuration config = load(in);
      auto index = binomial_index(config);
      if (!index) throw Error(ErrorCode::NotBinomial, "extension needs a binomial configuration");
      const auto subs = enumerate_free_complete(config, index->m - 1);
      write_output(out, emit_config(extend_one_more(config, subs)));
    } else if (t_swap->parsed()) {
      const Configuration config = load(in);
      SwapCertificate cert;
      if (!cert_path.empty()) {
        if (list_only) throw UsageError("--list and --certificate are exclusive");
        cert = parse_swap_certificate(read_text_file(cert_path));
      } else {
        const std::size_t n = default_order(config);
        const auto subs = enumerate_free_complete(config, n);
        if (subs.size() != 2) {
          throw Error(ErrorCode::NotExactlyTwo,
                      "configuration has " + std::to_string(subs.size()) + " free K_" + std::to_string(n));
        }
        const auto certs = find_swap_candidates(config, subs[0], subs[1]);
        if (list_only) {
          std::string text;
          for (const auto& c : certs) text += emit_swap_certificate(c);
          write_output(out, text);
          return 0;
        }
        cert = certs.front();
      }
      const Configuration result = swap_kill(config, cert);
      if (!cert_out.empty()) write_text_file(cert_out, emit_swap_certificate(cert));
      write_output(out, emit_config(result));
    } else if (a_sub->parsed()) {
      const Configuration config = load(in);
      const std::size_t n = order ? *order : default_order(config);
      if (n < 3) throw UsageError("--order must be at least 3");
      const auto subs = enumerate_free_complete(config, n);
      write_output(out, emit_subgraph_report(config, subs));
    } else if (a_comp->parsed()) {
      const Configuration config = load(in);
      std::vector<PointIndex> points;
      for (const std::string& label : split_list(vertex_tokens)) points.push_back(config.index_of(label));
      auto subgraph = is_freely_contained(config, points);
      if (!subgraph) throw Error(ErrorCode::StructureViolation, "the given vertices are not freely contained");
      write_output(out, emit_config(complement(config, *subgraph)));
    } else if (a_struct->parsed()) {
      const Configuration config = load(in);
      const std::size_t n = default_order(config);
      const auto subs = enumerate_free_complete(config, n);
      const StructureReport r = structure_report(config, subs);
      std::ostringstream s;
      s << "n " << r.n << "\nm " << r.m << "\n";
      for (std::size_t i = 0; i < r.m; ++i) {
        s << "X" << i + 1 << ": " << label_list(config, subs[i].vertices) << "\n";
        s << "Z" << i + 1 << ": " << label_list(config, r.private_vertices[i]) << "\n";
      }
      for (auto [i, j] : lex_pairs(r.m)) {
        s << "q " << i + 1 << "." << j + 1 << ": " << config.label(r.centers[pair_index(i, j, r.m)]) << "\n";
      }
      s << "axis points " << r.axis_points.size() << ": " << label_list(config, r.axis_points) << "\n";
      s << "axis lines " << r.axis_lines.size() << "\n";
      for (LineIndex l : r.axis_lines) s << "  " << line_text(config, l) << "\n";
      for (std::size_t i = 0; i < r.m; ++i) s << "G" << i + 1 << " " << r.private_sides[i].size() << "\n";
      s << "items 1-11 ok\n";
      write_output(out, s.str());
    } else if (a_dec->parsed()) {
      const Configuration config = load(in);
      const std::size_t n = default_order(config);
      const auto subs = enumerate_free_complete(config, n);
      if (axis_out.empty()) {
        if (out.empty() || out == "-") throw UsageError("decompose to stdout needs --axis-out");
        axis_out = out + ".axis";
      }
      const PerspectiveData data = decompose(config, subs);
      write_text_file(axis_out, emit_config(data.axis));
      std::string axis_ref = axis_out;
      if (!out.empty() && out != "-") {
        axis_ref = fs::absolute(axis_out).lexically_relative(fs::absolute(out).parent_path()).generic_string();
      }
      write_output(out, emit_perspective(data, axis_ref));
    } else if (iso->parsed()) {
      const Configuration a = load(iso_a);
      const Configuration b = load(iso_b);
      const auto map = find_isomorphism(a, b);
      std::ostringstream s;
      s << (map ? "isomorphic" : "not isomorphic") << "\n";
      if (emit_cert) {
        for (const auto* c : {&a, &b}) {
          const CanonicalForm form = canonical_form(*c);
          s << "digest " << form.digest() << "\n";
          for (const Triple& t : form.certificate) s << "  " << t[0] << " " << t[1] << " " << t[2] << "\n";
        }
        if (map) {
          for (PointIndex p = 0; p < a.point_count(); ++p) s << "map " << a.label(p) << " -> " << b.label((*map)[p]) << "\n";
        }
      }
      write_output("", s.str());
    } else if (v_bat->parsed()) {
      const BatteryReport report = run_property_battery(n_max, seed);
      json records = json::array();
      std::ostringstream s;
      s << "corpus " << report.corpus_size << " entries, n_max " << report.n_max << ", seed " << report.seed << "\n";
      for (const PropertyResult& p : report.properties) {
        s << (p.passed() ? "PASS " : "FAIL ") << p.property << " entries=" << p.entries << " failures=" << p.failures << "\n";
        for (const std::string& d : p.failure_details) s << "  " << d << "\n";
        json r = record(p.property, report.n_max, nullptr, p.entries, p.failures, nullptr);
        r["pass"] = p.passed();
        records.push_back(r);
      }
      write_output("", s.str());
      write_json(json_path, json{{"seed", report.seed}, {"records", records}});
      require_passed(report);
    } else if (v_ex->parsed()) {
      const auto witnesses = build_existence_corpus(n_arg);
      if (!out_dir.empty()) fs::create_directories(out_dir);
      json records = json::array();
      std::ostringstream s;
      for (const ExistenceWitness& w : witnesses) {
        json file = nullptr;
        if (!out_dir.empty()) {
          const fs::path path = fs::path(out_dir) / ("n" + std::to_string(w.n) + "_m" + std::to_string(w.m) + ".cfg");
          write_text_file(path, emit_config(w.entry.configuration));
          file = path.generic_string();
        }
        s << "n=" << w.n << " m=" << w.m << " count=" << w.entry.subgraph_count << " oracle=" << w.oracle_count
          << " " << w.entry.provenance << "\n";
        json r = record("existence", w.n, w.m, 1, w.oracle_count == w.m ? 0 : 1, file);
        r["pass"] = w.oracle_count == w.m;
        records.push_back(r);
      }
      write_output("", s.str());
      write_json(json_path, json{{"records", records}});
    } else if (cl_veb->parsed()) {
      const CensusReport census = classify_veblen_labellings();
      json records = json::array();
      std::ostringstream s;
      for (std::size_t i = 0; i < census.classes.size(); ++i) {
        const CensusClass& c = census.classes[i];
        s << "class " << i + 1 << ": free_k4=" << c.free_k4 << " labellings=" << c.labellings
          << " digest=" << c.form.digest();
        if (c.is_grassmannian) s << " desargues";
        if (c.is_veronesian) s << " kantor";
        s << " mu=" << join(c.representative.image, ",") << "\n";
        json r = record("census_class", 4, c.free_k4, c.labellings, 0, nullptr);
        r["digest"] = c.form.digest();
        records.push_back(r);
      }
      s << "counts:";
      for (std::size_t c : census.counts) s << " " << c;
      s << "\n";
      write_output("", s.str());
      write_json(json_path, json{{"records", records}});
    }
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: FileError: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
