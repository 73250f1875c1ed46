#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wsdisco/rbtt.hpp"
#include "wsdisco/representation.hpp"
#include "wsdisco/wsdl.hpp"

namespace wsdisco {

struct RatingRecord {
  std::string service_id;
  double score = 0.0;     // in [0,1]
  double age_days = 0.0;  // >= 0
};

enum class QoSDirection { HigherBetter, LowerBetter };

const char* to_string(QoSDirection d);
QoSDirection qos_direction_from(std::string_view s);

struct QoSAdvertisement {
  std::string service_id;
  std::string attribute;
  double value = 0.0;
  QoSDirection direction = QoSDirection::HigherBetter;
};

struct GraphEdge {
  std::string from;  // provider
  std::string to;    // consumer
};

// Document frequencies over one representation kind. postings keeps the
// sorted service ids per term so pair co-occurrence stays answerable.
struct TermStats {
  std::size_t M = 0;
  std::map<std::string, std::vector<std::string>> postings;

  bool contains(const std::string& term) const { return postings.count(term) != 0; }
  std::size_t df(const std::string& term) const;
  std::size_t co_df(const std::string& x, const std::string& y) const;
};

// Directory-backed persistence: one JSON-lines file per collection with an
// in-memory index loaded at open. Many readers or one writer, guarded by an
// advisory lock file.
class Store {
 public:
  enum class Mode { Read, ReadWrite };

  static Store create(const std::string& root);
  static Store open(const std::string& root, Mode mode);

  Store(Store&& other) noexcept;
  Store& operator=(Store&& other) noexcept;
  Store(const Store&) = delete;
  Store& operator=(const Store&) = delete;
  ~Store();

  const std::string& root() const { return root_; }

  // services
  void put_service(const ServiceRecord& service);
  const ServiceRecord& get_service(const std::string& id) const;
  bool has_service(const std::string& id) const;
  void delete_service(const std::string& id);  // cascades to dependent collections
  const std::map<std::string, ServiceRecord>& services() const { return services_; }

  // representations, keyed (service_id, kind)
  void put_representation(const Representation& rep);
  const Representation& get_representation(const std::string& id, RepKind kind) const;
  bool has_representation(const std::string& id, RepKind kind) const;
  void delete_representation(const std::string& id, RepKind kind);
  std::vector<const Representation*> list_representations(RepKind kind) const;

  // ratings, many per service
  void add_rating(const RatingRecord& rating);
  std::vector<RatingRecord> ratings_for(const std::string& id) const;
  void delete_ratings(const std::string& id);

  // QoS advertisements, keyed (service_id, attribute)
  void put_qos(const QoSAdvertisement& ad);
  std::vector<QoSAdvertisement> qos_for(const std::string& id) const;
  std::vector<QoSAdvertisement> all_qos() const;

  // annotations, replaced wholesale per service
  void set_annotations(const std::string& id, std::vector<Annotation> annotations);
  const std::vector<Annotation>* annotations_for(const std::string& id) const;

  // dependency graph edge list
  void set_graph_edges(std::vector<GraphEdge> edges);
  const std::vector<GraphEdge>& graph_edges() const { return graph_edges_; }

  // learned lexicon
  void set_lexicon(Lexicon lexicon);
  const Lexicon& lexicon() const { return lexicon_; }

  // Document frequencies for all representations of a kind; EmptyCorpus when
  // none are stored.
  TermStats term_stats(RepKind kind) const;

  void flush();

 private:
  Store() = default;
  void load();
  void require_writable() const;

  std::string root_;
  Mode mode_ = Mode::Read;
  int lock_fd_ = -1;

  std::map<std::string, ServiceRecord> services_;
  std::map<std::pair<std::string, RepKind>, Representation> representations_;
  std::map<std::string, std::vector<RatingRecord>> ratings_;
  std::map<std::pair<std::string, std::string>, QoSAdvertisement> qos_;
  std::map<std::string, std::vector<Annotation>> annotations_;
  std::vector<GraphEdge> graph_edges_;
  Lexicon lexicon_;
};

}  // namespace wsdisco
