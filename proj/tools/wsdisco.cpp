// wsdisco: WSDL corpus toolkit — ingest, representations, tagging,
// dependency graph, reputation, discovery, recommendation, evaluation.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wsdisco/depgraph.hpp"
#include "wsdisco/discovery.hpp"
#include "wsdisco/error.hpp"
#include "wsdisco/evalharness.hpp"
#include "wsdisco/ingest.hpp"
#include "wsdisco/rbtt.hpp"
#include "wsdisco/recommend.hpp"
#include "wsdisco/reputation.hpp"
#include "wsdisco/store.hpp"

using nlohmann::json;
using namespace wsdisco;

namespace {

struct CliConfig {
  std::string store;
  std::string stoplist;     // general stoplist file; empty = built-in
  std::string boilerplate;  // boilerplate stoplist file; empty = built-in
  std::string rules;        // rule file; empty = built-in
  std::string sim_method = "exact";
  double alpha = 0.8;
  double walk_d = 0.15;
  int walk_k = 5;
  std::uint64_t budget = 10'000'000;
  std::string vr_kind = "B";
  std::uint64_t seed = 0;
  double match_threshold = 0.1;
  int overlap_threshold = 1;
  double select_threshold = 0.5;
  double lambda = 0.5;
  int max_results = 10;
  bool check_availability = false;
  int timeout_ms = 3000;

  json to_json() const {
    return {{"store", store},
            {"stoplist", stoplist},
            {"boilerplate", boilerplate},
            {"rules", rules},
            {"sim_method", sim_method},
            {"alpha", alpha},
            {"walk_d", walk_d},
            {"walk_k", walk_k},
            {"budget", budget},
            {"vr_kind", vr_kind},
            {"seed", seed},
            {"match_threshold", match_threshold},
            {"overlap_threshold", overlap_threshold},
            {"select_threshold", select_threshold},
            {"lambda", lambda},
            {"max_results", max_results},
            {"check_availability", check_availability},
            {"timeout_ms", timeout_ms}};
  }

  void overlay(const json& j) {
    if (j.contains("store")) store = j.at("store").get<std::string>();
    if (j.contains("stoplist")) stoplist = j.at("stoplist").get<std::string>();
    if (j.contains("boilerplate")) boilerplate = j.at("boilerplate").get<std::string>();
    if (j.contains("rules")) rules = j.at("rules").get<std::string>();
    if (j.contains("sim_method")) sim_method = j.at("sim_method").get<std::string>();
    if (j.contains("alpha")) alpha = j.at("alpha").get<double>();
    if (j.contains("walk_d")) walk_d = j.at("walk_d").get<double>();
    if (j.contains("walk_k")) walk_k = j.at("walk_k").get<int>();
    if (j.contains("budget")) budget = j.at("budget").get<std::uint64_t>();
    if (j.contains("vr_kind")) vr_kind = j.at("vr_kind").get<std::string>();
    if (j.contains("seed")) seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("match_threshold")) match_threshold = j.at("match_threshold").get<double>();
    if (j.contains("overlap_threshold")) overlap_threshold = j.at("overlap_threshold").get<int>();
    if (j.contains("select_threshold")) select_threshold = j.at("select_threshold").get<double>();
    if (j.contains("lambda")) lambda = j.at("lambda").get<double>();
    if (j.contains("max_results")) max_results = j.at("max_results").get<int>();
    if (j.contains("check_availability"))
      check_availability = j.at("check_availability").get<bool>();
    if (j.contains("timeout_ms")) timeout_ms = j.at("timeout_ms").get<int>();
  }
};

// Tracks which flags were given explicitly, for flags > config file > defaults.
struct ConfigBinder {
  CliConfig flags;
  std::string config_path;
  std::vector<std::pair<CLI::Option*, std::function<void(CliConfig&, const CliConfig&)>>> copies;

  void bind(CLI::App* cmd) {
    auto add = [&](CLI::Option* opt, auto member) {
      copies.emplace_back(
          opt, [member](CliConfig& dst, const CliConfig& src) { dst.*member = src.*member; });
    };
    cmd->add_option("--config", config_path, "JSON config file mirroring the flag set");
    add(cmd->add_option("--store", flags.store, "store directory"), &CliConfig::store);
    add(cmd->add_option("--stoplist", flags.stoplist, "general stoplist file"),
        &CliConfig::stoplist);
    add(cmd->add_option("--boilerplate", flags.boilerplate, "boilerplate stoplist file"),
        &CliConfig::boilerplate);
    add(cmd->add_option("--rules", flags.rules, "tagging rule file"), &CliConfig::rules);
    add(cmd->add_option("--sim-method", flags.sim_method, "exact | ngd")
            ->check(CLI::IsMember({"exact", "ngd"})),
        &CliConfig::sim_method);
    add(cmd->add_option("--alpha", flags.alpha, "similarity threshold")
            ->check(CLI::Range(0.0, 1.0)),
        &CliConfig::alpha);
    add(cmd->add_option("--walk-d", flags.walk_d, "random surfer jump probability")
            ->check(CLI::Range(0.0, 1.0)),
        &CliConfig::walk_d);
    add(cmd->add_option("--walk-k", flags.walk_k, "maximum walk length")
            ->check(CLI::PositiveNumber),
        &CliConfig::walk_k);
    add(cmd->add_option("--budget", flags.budget, "path enumeration budget"), &CliConfig::budget);
    add(cmd->add_option("--vr-kind", flags.vr_kind, "representation used as VR")
            ->check(CLI::IsMember({"B", "RBTT"})),
        &CliConfig::vr_kind);
    add(cmd->add_option("--seed", flags.seed, "RNG seed"), &CliConfig::seed);
    add(cmd->add_option("--match-threshold", flags.match_threshold, "functional match cutoff"),
        &CliConfig::match_threshold);
    add(cmd->add_option("--overlap-threshold", flags.overlap_threshold,
                        "minimum SR/VR term overlap"),
        &CliConfig::overlap_threshold);
    add(cmd->add_option("--select-threshold", flags.select_threshold,
                        "random-fallback score cutoff"),
        &CliConfig::select_threshold);
    add(cmd->add_option("--lambda", flags.lambda, "rating inclusion factor")
            ->check(CLI::Range(0.0, 1.0)),
        &CliConfig::lambda);
    add(cmd->add_option("--max-results", flags.max_results, "recommendation cap"),
        &CliConfig::max_results);
    add(cmd->add_flag("--check-availability", flags.check_availability,
                      "probe URL sources before ingesting"),
        &CliConfig::check_availability);
    add(cmd->add_option("--timeout-ms", flags.timeout_ms, "availability/fetch timeout"),
        &CliConfig::timeout_ms);
  }

  CliConfig resolve() const {
    CliConfig effective;  // built-in defaults
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) fail(Errc::IoError, "cannot open config file: " + config_path);
      json j = json::parse(in, nullptr, false);
      if (j.is_discarded()) fail(Errc::IoError, "config file is not valid JSON: " + config_path);
      effective.overlay(j);
    }
    for (const auto& [opt, copy] : copies)
      if (opt->count() > 0) copy(effective, flags);
    return effective;
  }
};

std::string read_file_or_fail(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoError, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const json& out, const std::string& out_path) {
  std::string text = out.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) fail(Errc::IoError, "cannot write output file: " + out_path);
    f << text;
  }
}

std::string dirname_of(const std::string& path) {
  std::size_t slash = path.find_last_of('/');
  return slash == std::string::npos ? std::string(".") : path.substr(0, slash);
}

Stoplist load_stoplist_or_default(const std::string& path, const Stoplist& fallback) {
  return path.empty() ? fallback : Stoplist::from_file(path);
}

std::vector<TagRule> load_rules_or_default(const std::string& path) {
  return path.empty() ? default_rules() : load_rules(path);
}

RepKind vr_kind_of(const CliConfig& cfg) { return rep_kind_from(cfg.vr_kind); }

DependencyGraph graph_from_store(const Store& store) {
  std::vector<std::string> nodes;
  for (const auto& [id, svc] : store.services()) {
    (void)svc;
    nodes.push_back(id);
  }
  return DependencyGraph::from_edges(store.graph_edges(), nodes);
}

json scored_to_json(const ScoredService& s, const Store& store) {
  json j;
  j["service_id"] = s.service_id;
  j["functional_score"] = s.functional_score;
  if (s.qos_score) j["qos_score"] = *s.qos_score;
  if (s.reputation_score) j["reputation_score"] = *s.reputation_score;
  j["overall"] = s.overall;
  if (store.has_service(s.service_id)) {
    const ServiceRecord& svc = store.get_service(s.service_id);
    j["name"] = svc.name;
    j["wsdl_uri"] = svc.wsdl_uri;
  }
  return j;
}

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

int cmd_ingest(const CliConfig& cfg, const std::string& manifest_path,
               const std::string& out_path) {
  CorpusManifest manifest = load_manifest(manifest_path);
  Store store = Store::create(cfg.store);

  IngestOptions options;
  options.availability.enabled = cfg.check_availability;
  options.availability.timeout_ms = cfg.timeout_ms;
  options.base_dir = dirname_of(manifest_path);

  IngestReport report = ingest_corpus(manifest, store, options);
  store.flush();

  json out;
  out["command"] = "ingest";
  out["config"] = cfg.to_json();
  out["report"] = {{"parsed", report.parsed},
                   {"discarded_unavailable", report.discarded_unavailable},
                   {"discarded_language", report.discarded_language},
                   {"services_stored", report.services_stored}};
  write_output(out, out_path);
  return 0;
}

int cmd_build_reps(const CliConfig& cfg, const std::string& out_path) {
  Store store = Store::open(cfg.store, Store::Mode::ReadWrite);
  Stoplist general = load_stoplist_or_default(cfg.stoplist, default_general_stoplist());
  Stoplist boiler = load_stoplist_or_default(cfg.boilerplate, default_boilerplate_stoplist());

  std::size_t built = 0;
  for (const auto& [id, svc] : store.services()) {
    (void)id;
    store.put_representation(build_baseline(svc, general, boiler));
    ++built;
  }
  store.flush();

  json out;
  out["command"] = "build-reps";
  out["config"] = cfg.to_json();
  out["kind"] = "B";
  out["representations"] = built;
  write_output(out, out_path);
  return 0;
}

int cmd_tag(const CliConfig& cfg, const std::string& xml_out, const std::string& out_path) {
  Store store = Store::open(cfg.store, Store::Mode::ReadWrite);
  Stoplist general = load_stoplist_or_default(cfg.stoplist, default_general_stoplist());
  Stoplist boiler = load_stoplist_or_default(cfg.boilerplate, default_boilerplate_stoplist());
  std::vector<TagRule> rules = load_rules_or_default(cfg.rules);

  Lexicon lexicon = store.lexicon();
  std::string xml;
  std::size_t annotated = 0, total_annotations = 0;

  for (const auto& [id, svc] : store.services()) {
    // the description is the service documentation plus one paragraph per
    // documented operation
    std::string text = svc.documentation;
    for (const auto& op : svc.operations) {
      if (op.documentation.empty()) continue;
      if (!text.empty()) text += "\n\n";
      text += op.documentation;
    }

    std::vector<Annotation> annotations = apply_rules(tokenize_tag(text), rules);
    for (auto& ann : annotations) ann.service_id = id;
    if (!annotations.empty()) {
      ++annotated;
      total_annotations += annotations.size();
      update_lexicon(annotations, lexicon);
    }
    store.set_annotations(id, annotations);
    store.put_representation(build_rbtt_representation(annotations, svc, general, boiler));
    xml += export_annotations_xml(annotations, id);
    xml += '\n';
  }
  store.set_lexicon(std::move(lexicon));
  store.flush();

  if (!xml_out.empty()) {
    std::ofstream f(xml_out, std::ios::binary);
    if (!f) fail(Errc::IoError, "cannot write XML output: " + xml_out);
    f << xml;
  }

  json out;
  out["command"] = "tag";
  out["config"] = cfg.to_json();
  out["services"] = store.services().size();
  out["services_with_annotations"] = annotated;
  out["annotations"] = total_annotations;
  out["lexicon_terms"] = store.lexicon().size();
  if (!xml_out.empty()) out["xml_out"] = xml_out;
  write_output(out, out_path);
  return 0;
}

int cmd_graph(const CliConfig& cfg, const std::string& out_path) {
  Store store = Store::open(cfg.store, Store::Mode::ReadWrite);
  SimilarityConfig sim{sim_method_from(cfg.sim_method), cfg.alpha};
  DependencyGraph graph = build_dependency_graph(store, sim);
  store.set_graph_edges(graph.edge_list());
  store.flush();

  json out;
  out["command"] = "graph";
  out["config"] = cfg.to_json();
  out["nodes"] = graph.nodes.size();
  out["edges"] = graph.edges.size();
  write_output(out, out_path);
  return 0;
}

int cmd_reputation(const CliConfig& cfg, const std::string& out_path) {
  Store store = Store::open(cfg.store, Store::Mode::ReadWrite);
  RepKind kind = vr_kind_of(cfg);
  TermStats stats = store.term_stats(kind);
  DependencyGraph graph = graph_from_store(store);

  std::map<std::string, std::vector<std::string>> vr;
  for (const Representation* rep : store.list_representations(kind)) {
    auto& terms = vr[rep->service_id];
    for (const auto& [term, weight] : rep->terms) {
      (void)weight;
      terms.push_back(term);
    }
  }

  WalkConfig walk{cfg.walk_d, cfg.walk_k, cfg.budget};
  VrLookup lookup = make_vr_lookup(vr);

  std::size_t with_terms = 0;
  for (const auto& [id, svc] : store.services()) {
    (void)svc;
    SymbolicReputation sr = symbolic_reputation(id, graph, lookup, stats, walk);
    Representation rep;
    rep.service_id = id;
    rep.kind = RepKind::SR;
    for (const auto& term : sr.terms) rep.terms[term] = sr.scores.at(term);
    rep.raw_scores = sr.scores;
    store.put_representation(rep);
    if (!sr.terms.empty()) ++with_terms;
  }
  store.flush();

  // numeric reputation is derived from stored ratings on demand; echo it here
  json numeric = json::object();
  NumericReputationConfig rep_cfg{cfg.lambda};
  for (const auto& [id, svc] : store.services()) {
    (void)svc;
    auto ratings = store.ratings_for(id);
    if (!ratings.empty()) numeric[id] = numeric_reputation(ratings, rep_cfg);
  }

  json out;
  out["command"] = "reputation";
  out["config"] = cfg.to_json();
  out["services"] = store.services().size();
  out["services_with_sr_terms"] = with_terms;
  out["numeric_reputation"] = std::move(numeric);
  write_output(out, out_path);
  return 0;
}

Query parse_query(const json& j, const CliConfig& cfg) {
  Query q;
  q.functional_terms = j.value("functional_terms", "");
  q.rep_kind = rep_kind_from(j.value("rep_kind", cfg.vr_kind));
  if (q.rep_kind == RepKind::SR)
    fail(Errc::MissingRepresentation, "queries run against B or RBTT representations");
  q.match_threshold = j.value("match_threshold", cfg.match_threshold);
  if (j.contains("nb_max") && !j.at("nb_max").is_null()) q.nb_max = j.at("nb_max").get<int>();
  if (j.contains("qos_requirements") && !j.at("qos_requirements").is_null()) {
    std::vector<QosRequirement> reqs;
    for (const auto& r : j.at("qos_requirements")) {
      QosRequirement req;
      req.attribute = r.at("attribute").get<std::string>();
      if (r.contains("constraint")) {
        const json& c = r.at("constraint");
        if (c.contains("min") && !c.at("min").is_null())
          req.constraint.min = c.at("min").get<double>();
        if (c.contains("max") && !c.at("max").is_null())
          req.constraint.max = c.at("max").get<double>();
      }
      req.weight = r.value("weight", 0.0);
      reqs.push_back(std::move(req));
    }
    q.qos_requirements = std::move(reqs);
  }
  if (j.contains("reputation_requirement") && !j.at("reputation_requirement").is_null()) {
    const json& r = j.at("reputation_requirement");
    q.reputation_requirement =
        ReputationRequirement{r.value("min_score", 0.0), r.value("weight", 0.0)};
  }
  return q;
}

int cmd_discover(const CliConfig& cfg, const std::string& query_path,
                 const std::string& out_path) {
  Store store = Store::open(cfg.store, Store::Mode::Read);
  json qj = json::parse(read_file_or_fail(query_path), nullptr, false);
  if (qj.is_discarded()) fail(Errc::IoError, "query file is not valid JSON: " + query_path);
  Query query = parse_query(qj, cfg);

  DiscoveryOptions options{cfg.lambda, cfg.select_threshold, cfg.seed};
  DiscoveryResult result = discover(query, store, options);

  json out;
  out["command"] = "discover";
  out["config"] = cfg.to_json();
  out["mode"] = to_string(result.mode);
  json results = json::array();
  for (const auto& s : result.services) results.push_back(scored_to_json(s, store));
  out["results"] = std::move(results);
  out["dropped_missing_reputation"] = result.dropped_missing_reputation;
  write_output(out, out_path);
  return 0;
}

int cmd_recommend(const CliConfig& cfg, const std::string& target, const std::string& out_path) {
  Store store = Store::open(cfg.store, Store::Mode::Read);

  std::string target_id = target;
  if (target.find("://") != std::string::npos) {
    target_id.clear();
    for (const auto& [id, svc] : store.services()) {
      if (svc.wsdl_uri == target) {
        target_id = id;
        break;
      }
    }
    if (target_id.empty()) fail(Errc::NotFound, "no service with wsdl_uri " + target);
  }

  RecommendationConfig rec_cfg;
  rec_cfg.overlap_threshold = cfg.overlap_threshold;
  rec_cfg.max_results = cfg.max_results;
  rec_cfg.vr_kind = vr_kind_of(cfg);
  rec_cfg.lambda = cfg.lambda;

  std::vector<Recommendation> recs = recommend(target_id, store, rec_cfg);

  const ServiceRecord& target_svc = store.get_service(target_id);
  json out;
  out["command"] = "recommend";
  out["config"] = cfg.to_json();
  out["target"] = {{"id", target_svc.id},
                   {"name", target_svc.name},
                   {"wsdl_uri", target_svc.wsdl_uri}};
  json list = json::array();
  for (const auto& rec : recs) {
    json j = scored_to_json(rec.scored, store);
    j["overlap"] = rec.overlap;
    list.push_back(std::move(j));
  }
  out["recommended"] = std::move(list);
  write_output(out, out_path);
  return 0;
}

std::vector<std::string> split_csv_flag(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_eval(const CliConfig& cfg, const std::string& categories_flag,
             const std::string& kinds_flag, const std::string& query_template,
             const std::string& csv_path, const std::string& md_path,
             const std::string& out_path) {
  Store store = Store::open(cfg.store, Store::Mode::Read);

  std::vector<std::string> categories = split_csv_flag(categories_flag);
  std::vector<RepKind> kinds;
  for (const auto& k : split_csv_flag(kinds_flag)) kinds.push_back(rep_kind_from(k));
  if (categories.empty()) fail(Errc::UnknownCategory, "no categories given");
  if (kinds.empty()) fail(Errc::MissingRepresentation, "no representation kinds given");

  ExperimentReport report = run_category_experiment(store, categories, kinds, query_template);
  std::string csv = to_csv(report);
  std::string markdown = to_markdown(report);

  if (!csv_path.empty()) {
    std::ofstream f(csv_path, std::ios::binary);
    if (!f) fail(Errc::IoError, "cannot write " + csv_path);
    f << csv;
  }
  if (!md_path.empty()) {
    std::ofstream f(md_path, std::ios::binary);
    if (!f) fail(Errc::IoError, "cannot write " + md_path);
    f << markdown;
  }

  json cells = json::array();
  for (const auto& c : report.cells) {
    json cell;
    cell["category"] = c.category;
    cell["rep_kind"] = to_string(c.kind);
    if (c.precision_pct) cell["precision_pct"] = *c.precision_pct;
    cell["recall_pct"] = c.recall_pct;
    cells.push_back(std::move(cell));
  }

  json out;
  out["command"] = "eval";
  out["config"] = cfg.to_json();
  out["cells"] = std::move(cells);
  out["undefined_cells"] = report.undefined_cells;
  out["csv"] = csv;
  out["markdown"] = markdown;
  write_output(out, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"WSDL corpus discovery and recommendation toolkit"};
  app.require_subcommand(1);

  struct SubState {
    ConfigBinder binder;
    std::string out_path;
  };

  auto setup = [&](CLI::App* cmd, SubState& state) {
    state.binder.bind(cmd);
    cmd->add_option("--out", state.out_path, "write JSON output here instead of stdout");
  };

  SubState ingest_state;
  std::string manifest_path;
  CLI::App* ingest_cmd = app.add_subcommand("ingest", "parse a manifest into a new store");
  setup(ingest_cmd, ingest_state);
  ingest_cmd->add_option("--manifest", manifest_path, "JSON-lines corpus manifest")->required();

  SubState reps_state;
  CLI::App* reps_cmd = app.add_subcommand("build-reps", "build baseline representations");
  setup(reps_cmd, reps_state);

  SubState tag_state;
  std::string xml_out;
  CLI::App* tag_cmd = app.add_subcommand("tag", "run rules-based text tagging");
  setup(tag_cmd, tag_state);
  tag_cmd->add_option("--xml-out", xml_out, "write annotation XML here");

  SubState graph_state;
  CLI::App* graph_cmd = app.add_subcommand("graph", "build the dependency graph");
  setup(graph_cmd, graph_state);

  SubState rep_state;
  CLI::App* rep_cmd = app.add_subcommand("reputation", "compute symbolic reputation");
  setup(rep_cmd, rep_state);

  SubState discover_state;
  std::string query_path;
  CLI::App* discover_cmd = app.add_subcommand("discover", "run a discovery query");
  setup(discover_cmd, discover_state);
  discover_cmd->add_option("--query", query_path, "query JSON file")->required();

  SubState recommend_state;
  std::string target;
  CLI::App* recommend_cmd = app.add_subcommand("recommend", "recommend services for a target");
  setup(recommend_cmd, recommend_state);
  recommend_cmd->add_option("--target", target, "target service id or wsdl_uri")->required();

  SubState eval_state;
  std::string categories_flag;
  std::string kinds_flag = "B,RBTT";
  std::string query_template = "{category}";
  std::string csv_path, md_path;
  CLI::App* eval_cmd = app.add_subcommand("eval", "category precision/recall experiment");
  setup(eval_cmd, eval_state);
  eval_cmd->add_option("--categories", categories_flag, "comma-separated category list")
      ->required();
  eval_cmd->add_option("--kinds", kinds_flag, "comma-separated representation kinds");
  eval_cmd->add_option("--query-template", query_template, "query text; {category} substituted");
  eval_cmd->add_option("--out-csv", csv_path, "write the CSV report here");
  eval_cmd->add_option("--out-md", md_path, "write the Markdown report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (ingest_cmd->parsed())
      return cmd_ingest(ingest_state.binder.resolve(), manifest_path, ingest_state.out_path);
    if (reps_cmd->parsed()) return cmd_build_reps(reps_state.binder.resolve(), reps_state.out_path);
    if (tag_cmd->parsed()) return cmd_tag(tag_state.binder.resolve(), xml_out, tag_state.out_path);
    if (graph_cmd->parsed()) return cmd_graph(graph_state.binder.resolve(), graph_state.out_path);
    if (rep_cmd->parsed()) return cmd_reputation(rep_state.binder.resolve(), rep_state.out_path);
    if (discover_cmd->parsed())
      return cmd_discover(discover_state.binder.resolve(), query_path, discover_state.out_path);
    if (recommend_cmd->parsed())
      return cmd_recommend(recommend_state.binder.resolve(), target, recommend_state.out_path);
    if (eval_cmd->parsed())
      return cmd_eval(eval_state.binder.resolve(), categories_flag, kinds_flag, query_template,
                      csv_path, md_path, eval_state.out_path);
  } catch (const Error& e) {
    json err = {{"error", {{"code", errc_name(e.code())}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    json err = {{"error", {{"code", "internal"}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 2;
}
