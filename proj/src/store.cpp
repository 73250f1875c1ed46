#include "wsdisco/store.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <sys/stat.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "wsdisco/error.hpp"

namespace wsdisco {

using nlohmann::json;

namespace {

std::string collection_path(const std::string& root, const std::string& name) {
  return root + "/" + name + ".jsonl";
}

// ---- JSON mappings --------------------------------------------------------

json to_json(const ServiceRecord& s) {
  json j;
  j["id"] = s.id;
  j["name"] = s.name;
  j["wsdl_uri"] = s.wsdl_uri;
  j["documentation"] = s.documentation;
  j["wsdl_version"] = to_string(s.wsdl_version);
  j["language"] = s.language;
  if (s.category) j["category"] = *s.category;
  json eps = json::array();
  for (const auto& e : s.endpoints) {
    eps.push_back({{"name", e.name},
                   {"address", e.address},
                   {"binding_name", e.binding_name},
                   {"binding_style", to_string(e.binding_style)},
                   {"transport", e.transport}});
  }
  j["endpoints"] = std::move(eps);
  json ops = json::array();
  for (const auto& op : s.operations) {
    json o;
    o["name"] = op.name;
    o["documentation"] = op.documentation;
    auto params = [](const std::vector<ParamRecord>& ps) {
      json arr = json::array();
      for (const auto& p : ps)
        arr.push_back({{"name", p.name}, {"type_ref", p.type_ref}, {"external", p.external}});
      return arr;
    };
    o["inputs"] = params(op.inputs);
    o["outputs"] = params(op.outputs);
    ops.push_back(std::move(o));
  }
  j["operations"] = std::move(ops);
  json types = json::array();
  for (const auto& t : s.declared_types)
    types.push_back({{"kind", to_string(t.kind)}, {"name", t.name}, {"member_names", t.member_names}});
  j["declared_types"] = std::move(types);
  return j;
}

ServiceRecord service_from_json(const json& j) {
  ServiceRecord s;
  s.id = j.at("id").get<std::string>();
  s.name = j.value("name", "");
  s.wsdl_uri = j.value("wsdl_uri", "");
  s.documentation = j.value("documentation", "");
  s.wsdl_version = wsdl_version_from(j.value("wsdl_version", "1.1"));
  s.language = j.value("language", "unknown");
  if (j.contains("category")) s.category = j.at("category").get<std::string>();
  for (const auto& e : j.value("endpoints", json::array())) {
    EndpointRecord ep;
    ep.name = e.value("name", "");
    ep.address = e.value("address", "");
    ep.binding_name = e.value("binding_name", "");
    ep.binding_style = binding_style_from(e.value("binding_style", "Unknown"));
    ep.transport = e.value("transport", "");
    s.endpoints.push_back(std::move(ep));
  }
  for (const auto& o : j.value("operations", json::array())) {
    OperationRecord op;
    op.name = o.value("name", "");
    op.documentation = o.value("documentation", "");
    auto params = [](const json& arr) {
      std::vector<ParamRecord> ps;
      for (const auto& p : arr)
        ps.push_back({p.value("name", ""), p.value("type_ref", ""), p.value("external", false)});
      return ps;
    };
    op.inputs = params(o.value("inputs", json::array()));
    op.outputs = params(o.value("outputs", json::array()));
    s.operations.push_back(std::move(op));
  }
  for (const auto& t : j.value("declared_types", json::array())) {
    TypeRecord tr;
    tr.kind = type_kind_from(t.value("kind", "Element"));
    tr.name = t.value("name", "");
    tr.member_names = t.value("member_names", std::vector<std::string>{});
    s.declared_types.push_back(std::move(tr));
  }
  return s;
}

json to_json(const Representation& r) {
  json j;
  j["service_id"] = r.service_id;
  j["kind"] = to_string(r.kind);
  json terms = json::object();
  for (const auto& [term, weight] : r.terms) {
    if (r.kind == RepKind::SR)
      terms[term] = weight;
    else
      terms[term] = static_cast<std::int64_t>(std::llround(weight));
  }
  j["terms"] = std::move(terms);
  if (r.kind == RepKind::SR) {
    json raw = json::object();
    for (const auto& [term, score] : r.raw_scores) raw[term] = score;
    j["raw_scores"] = std::move(raw);
  }
  return j;
}

Representation representation_from_json(const json& j) {
  Representation r;
  r.service_id = j.at("service_id").get<std::string>();
  r.kind = rep_kind_from(j.value("kind", "B"));
  json terms = j.value("terms", json::object());
  for (const auto& [term, weight] : terms.items()) r.terms[term] = weight.get<double>();
  json raw = j.value("raw_scores", json::object());
  for (const auto& [term, score] : raw.items()) r.raw_scores[term] = score.get<double>();
  return r;
}

json to_json(const RatingRecord& r) {
  return {{"service_id", r.service_id}, {"score", r.score}, {"age_days", r.age_days}};
}

json to_json(const QoSAdvertisement& q) {
  return {{"service_id", q.service_id},
          {"attribute", q.attribute},
          {"value", q.value},
          {"direction", to_string(q.direction)}};
}

json to_json(const Annotation& a) {
  return {{"service_id", a.service_id}, {"rule_type", to_string(a.rule_type)},
          {"text", a.text},             {"start", a.start},
          {"end", a.end},               {"rule_id", a.rule_id}};
}

Annotation annotation_from_json(const json& j) {
  Annotation a;
  a.service_id = j.at("service_id").get<std::string>();
  a.rule_type = rule_type_from(j.value("rule_type", "namews"));
  a.text = j.value("text", "");
  a.start = j.value("start", 0);
  a.end = j.value("end", 0);
  a.rule_id = j.value("rule_id", "");
  return a;
}

json to_json(const LexiconEntry& e) {
  return {{"id", std::string(to_string(e.rule_type)) + ":" + e.term},
          {"term", e.term},
          {"rule_type", to_string(e.rule_type)},
          {"frequency", e.frequency()},
          {"sources", e.sources}};
}

void write_lines(const std::string& path, const std::vector<json>& lines) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::IoError, "cannot write " + tmp);
    for (const auto& j : lines) out << j.dump() << '\n';
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    fail(Errc::IoError, "cannot rename " + tmp + " to " + path);
}

std::vector<json> read_lines(const std::string& path) {
  std::vector<json> out;
  std::ifstream in(path, std::ios::binary);
  if (!in) return out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded())
      fail(Errc::IoError, path + ":" + std::to_string(line_no) + ": bad JSON line");
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace

const char* to_string(QoSDirection d) {
  return d == QoSDirection::HigherBetter ? "HigherBetter" : "LowerBetter";
}

QoSDirection qos_direction_from(std::string_view s) {
  return s == "LowerBetter" ? QoSDirection::LowerBetter : QoSDirection::HigherBetter;
}

std::size_t TermStats::df(const std::string& term) const {
  auto it = postings.find(term);
  return it == postings.end() ? 0 : it->second.size();
}

std::size_t TermStats::co_df(const std::string& x, const std::string& y) const {
  auto ix = postings.find(x);
  auto iy = postings.find(y);
  if (ix == postings.end() || iy == postings.end()) return 0;
  const auto& a = ix->second;
  const auto& b = iy->second;
  std::size_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else { ++count; ++i; ++j; }
  }
  return count;
}

Store Store::create(const std::string& root) {
  ::mkdir(root.c_str(), 0777);
  return open(root, Mode::ReadWrite);
}

Store Store::open(const std::string& root, Mode mode) {
  struct stat st{};
  if (::stat(root.c_str(), &st) != 0 || !S_ISDIR(st.st_mode))
    fail(Errc::IoError, "store directory does not exist: " + root);

  Store store;
  store.root_ = root;
  store.mode_ = mode;

  std::string lock_path = root + "/.lock";
  store.lock_fd_ = ::open(lock_path.c_str(), O_CREAT | O_RDWR, 0666);
  if (store.lock_fd_ < 0) fail(Errc::IoError, "cannot open lock file: " + lock_path);
  int op = (mode == Mode::ReadWrite ? LOCK_EX : LOCK_SH) | LOCK_NB;
  if (::flock(store.lock_fd_, op) != 0) {
    ::close(store.lock_fd_);
    store.lock_fd_ = -1;
    fail(Errc::StoreLocked, "store is locked by another process: " + root);
  }

  store.load();
  return store;
}

Store::Store(Store&& other) noexcept { *this = std::move(other); }

Store& Store::operator=(Store&& other) noexcept {
  if (this != &other) {
    if (lock_fd_ >= 0) ::close(lock_fd_);
    root_ = std::move(other.root_);
    mode_ = other.mode_;
    lock_fd_ = other.lock_fd_;
    other.lock_fd_ = -1;
    services_ = std::move(other.services_);
    representations_ = std::move(other.representations_);
    ratings_ = std::move(other.ratings_);
    qos_ = std::move(other.qos_);
    annotations_ = std::move(other.annotations_);
    graph_edges_ = std::move(other.graph_edges_);
    lexicon_ = std::move(other.lexicon_);
  }
  return *this;
}

Store::~Store() {
  if (lock_fd_ >= 0) ::close(lock_fd_);
}

void Store::load() {
  for (const auto& j : read_lines(collection_path(root_, "services"))) {
    ServiceRecord s = service_from_json(j);
    std::string id = s.id;
    services_.emplace(std::move(id), std::move(s));
  }
  for (const auto& j : read_lines(collection_path(root_, "representations"))) {
    Representation r = representation_from_json(j);
    representations_.emplace(std::make_pair(r.service_id, r.kind), std::move(r));
  }
  for (const auto& j : read_lines(collection_path(root_, "ratings"))) {
    RatingRecord r{j.at("service_id").get<std::string>(), j.value("score", 0.0),
                   j.value("age_days", 0.0)};
    ratings_[r.service_id].push_back(std::move(r));
  }
  for (const auto& j : read_lines(collection_path(root_, "qos"))) {
    QoSAdvertisement q{j.at("service_id").get<std::string>(), j.value("attribute", ""),
                       j.value("value", 0.0), qos_direction_from(j.value("direction", ""))};
    qos_.emplace(std::make_pair(q.service_id, q.attribute), std::move(q));
  }
  for (const auto& j : read_lines(collection_path(root_, "annotations"))) {
    Annotation a = annotation_from_json(j);
    annotations_[a.service_id].push_back(std::move(a));
  }
  for (const auto& j : read_lines(collection_path(root_, "graph")))
    graph_edges_.push_back({j.at("from").get<std::string>(), j.at("to").get<std::string>()});
  for (const auto& j : read_lines(collection_path(root_, "lexicon"))) {
    LexiconEntry e;
    e.term = j.value("term", "");
    e.rule_type = rule_type_from(j.value("rule_type", "namews"));
    e.sources = j.value("sources", std::vector<std::string>{});
    lexicon_.push_back(std::move(e));
  }
}

void Store::require_writable() const {
  if (mode_ != Mode::ReadWrite) fail(Errc::IoError, "store opened read-only: " + root_);
}

void Store::put_service(const ServiceRecord& service) {
  require_writable();
  if (service.id.empty()) fail(Errc::ReferentialIntegrity, "service id must not be empty");
  services_[service.id] = service;
}

const ServiceRecord& Store::get_service(const std::string& id) const {
  auto it = services_.find(id);
  if (it == services_.end()) fail(Errc::NotFound, "no such service: " + id);
  return it->second;
}

bool Store::has_service(const std::string& id) const { return services_.count(id) != 0; }

void Store::delete_service(const std::string& id) {
  require_writable();
  if (services_.erase(id) == 0) fail(Errc::NotFound, "no such service: " + id);
  for (auto it = representations_.begin(); it != representations_.end();)
    it = it->first.first == id ? representations_.erase(it) : std::next(it);
  ratings_.erase(id);
  for (auto it = qos_.begin(); it != qos_.end();)
    it = it->first.first == id ? qos_.erase(it) : std::next(it);
  annotations_.erase(id);
  graph_edges_.erase(std::remove_if(graph_edges_.begin(), graph_edges_.end(),
                                    [&](const GraphEdge& e) { return e.from == id || e.to == id; }),
                     graph_edges_.end());
}

void Store::put_representation(const Representation& rep) {
  require_writable();
  if (!has_service(rep.service_id))
    fail(Errc::ReferentialIntegrity, "representation references unknown service: " + rep.service_id);
  representations_[std::make_pair(rep.service_id, rep.kind)] = rep;
}

const Representation& Store::get_representation(const std::string& id, RepKind kind) const {
  auto it = representations_.find(std::make_pair(id, kind));
  if (it == representations_.end())
    fail(Errc::NotFound, "no " + std::string(to_string(kind)) + " representation for " + id);
  return it->second;
}

bool Store::has_representation(const std::string& id, RepKind kind) const {
  return representations_.count(std::make_pair(id, kind)) != 0;
}

void Store::delete_representation(const std::string& id, RepKind kind) {
  require_writable();
  if (representations_.erase(std::make_pair(id, kind)) == 0)
    fail(Errc::NotFound, "no " + std::string(to_string(kind)) + " representation for " + id);
}

std::vector<const Representation*> Store::list_representations(RepKind kind) const {
  std::vector<const Representation*> out;
  for (const auto& [key, rep] : representations_)
    if (key.second == kind) out.push_back(&rep);
  return out;
}

void Store::add_rating(const RatingRecord& rating) {
  require_writable();
  if (!has_service(rating.service_id))
    fail(Errc::ReferentialIntegrity, "rating references unknown service: " + rating.service_id);
  if (rating.score < 0.0 || rating.score > 1.0)
    fail(Errc::ReferentialIntegrity, "rating score must be in [0,1]");
  if (rating.age_days < 0.0) fail(Errc::ReferentialIntegrity, "rating age must be >= 0");
  ratings_[rating.service_id].push_back(rating);
}

std::vector<RatingRecord> Store::ratings_for(const std::string& id) const {
  auto it = ratings_.find(id);
  return it == ratings_.end() ? std::vector<RatingRecord>{} : it->second;
}

void Store::delete_ratings(const std::string& id) {
  require_writable();
  ratings_.erase(id);
}

void Store::put_qos(const QoSAdvertisement& ad) {
  require_writable();
  if (!has_service(ad.service_id))
    fail(Errc::ReferentialIntegrity, "QoS advertisement references unknown service: " + ad.service_id);
  if (!std::isfinite(ad.value)) fail(Errc::ReferentialIntegrity, "QoS value must be finite");
  qos_[std::make_pair(ad.service_id, ad.attribute)] = ad;
}

std::vector<QoSAdvertisement> Store::qos_for(const std::string& id) const {
  std::vector<QoSAdvertisement> out;
  for (const auto& [key, ad] : qos_)
    if (key.first == id) out.push_back(ad);
  return out;
}

std::vector<QoSAdvertisement> Store::all_qos() const {
  std::vector<QoSAdvertisement> out;
  for (const auto& [key, ad] : qos_) out.push_back(ad);
  return out;
}

void Store::set_annotations(const std::string& id, std::vector<Annotation> annotations) {
  require_writable();
  if (!has_service(id))
    fail(Errc::ReferentialIntegrity, "annotations reference unknown service: " + id);
  for (auto& a : annotations) a.service_id = id;
  if (annotations.empty())
    annotations_.erase(id);
  else
    annotations_[id] = std::move(annotations);
}

const std::vector<Annotation>* Store::annotations_for(const std::string& id) const {
  auto it = annotations_.find(id);
  return it == annotations_.end() ? nullptr : &it->second;
}

void Store::set_graph_edges(std::vector<GraphEdge> edges) {
  require_writable();
  for (const auto& e : edges) {
    if (!has_service(e.from) || !has_service(e.to))
      fail(Errc::ReferentialIntegrity, "graph edge references unknown service");
  }
  std::sort(edges.begin(), edges.end(), [](const GraphEdge& a, const GraphEdge& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });
  graph_edges_ = std::move(edges);
}

void Store::set_lexicon(Lexicon lexicon) {
  require_writable();
  std::sort(lexicon.begin(), lexicon.end(), [](const LexiconEntry& a, const LexiconEntry& b) {
    return std::tie(a.rule_type, a.term) < std::tie(b.rule_type, b.term);
  });
  lexicon_ = std::move(lexicon);
}

TermStats Store::term_stats(RepKind kind) const {
  TermStats stats;
  for (const auto& [key, rep] : representations_) {
    if (key.second != kind) continue;
    ++stats.M;
    for (const auto& [term, weight] : rep.terms) {
      (void)weight;
      auto& ids = stats.postings[term];
      if (ids.empty() || ids.back() != rep.service_id) ids.push_back(rep.service_id);
    }
  }
  if (stats.M == 0)
    fail(Errc::EmptyCorpus, "no " + std::string(to_string(kind)) + " representations stored");
  return stats;
}

void Store::flush() {
  require_writable();

  std::vector<json> lines;
  for (const auto& [id, svc] : services_) lines.push_back(to_json(svc));
  write_lines(collection_path(root_, "services"), lines);

  lines.clear();
  for (const auto& [key, rep] : representations_) lines.push_back(to_json(rep));
  write_lines(collection_path(root_, "representations"), lines);

  lines.clear();
  for (const auto& [id, list] : ratings_)
    for (const auto& r : list) lines.push_back(to_json(r));
  write_lines(collection_path(root_, "ratings"), lines);

  lines.clear();
  for (const auto& [key, ad] : qos_) lines.push_back(to_json(ad));
  write_lines(collection_path(root_, "qos"), lines);

  lines.clear();
  for (const auto& [id, list] : annotations_)
    for (const auto& a : list) lines.push_back(to_json(a));
  write_lines(collection_path(root_, "annotations"), lines);

  lines.clear();
  for (const auto& e : graph_edges_) lines.push_back({{"from", e.from}, {"to", e.to}});
  write_lines(collection_path(root_, "graph"), lines);

  lines.clear();
  for (const auto& e : lexicon_) lines.push_back(to_json(e));
  write_lines(collection_path(root_, "lexicon"), lines);
}

}  // namespace wsdisco
