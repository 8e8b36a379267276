#include "minrec/json_io.hpp"

namespace minrec {

namespace {

Json one_based_list(const std::vector<int>& values) {
  Json list = Json::array();
  for (int v : values) list.push_back(v + 1);
  return list;
}

}  // namespace

Json json_oneline(const Permutation& sigma) { return one_based_list(sigma.images()); }

Json to_json(const ClassWitness& w) {
  Json out;
  out["kind"] = to_string(w.kind);
  out["k"] = w.k;
  out["n"] = w.n;
  out["labels"] = w.labels;
  if (w.position) out["position"] = *w.position + 1;
  if (w.sigma) out["sigma"] = json_oneline(*w.sigma);
  Json entries = Json::array();
  for (const auto& [key, label] : w.inner) {
    Json entry;
    switch (w.kind) {
      case ClassKind::supp:
      case ClassKind::oddsupp:
        entry["set"] = one_based_list(key);
        break;
      case ClassKind::msupp: {
        Json multiset = Json::array();
        for (std::size_t e = 0; e < key.size(); ++e) {
          if (key[e] == 0) continue;
          Json item;
          item["element"] = static_cast<int>(e) + 1;
          item["count"] = key[e];
          multiset.push_back(item);
        }
        entry["multiset"] = multiset;
        break;
      }
      case ClassKind::ofo:
      case ClassKind::weakly_ofo:
        entry["word"] = one_based_list(key);
        break;
      case ClassKind::pr_supp: {
        entry["value"] = key.front() + 1;
        entry["set"] = one_based_list({key.begin() + 1, key.end()});
        break;
      }
    }
    entry["label"] = w.labels[label];
    entries.push_back(entry);
  }
  out["entries"] = entries;
  return out;
}

Json to_json(const Deck& d) {
  Json out;
  out["k"] = d.k;
  out["card_arity"] = d.card_arity;
  out["labels"] = d.labels;
  out["distinct_cards"] = d.distinct_cards();
  out["total_multiplicity"] = d.total_multiplicity();
  Json cards = Json::array();
  for (const auto& [table, multiplicity] : d.cards) {
    Json card;
    Json entries = Json::array();
    for (std::uint8_t v : table) entries.push_back(d.labels[v]);
    card["table"] = entries;
    card["multiplicity"] = multiplicity;
    cards.push_back(card);
  }
  out["cards"] = cards;
  return out;
}

Json to_json(const EqualizingAnalysis& a) {
  Json out;
  out["sigma"] = json_oneline(a.sigma);
  out["k"] = a.k;
  out["u_size"] = static_cast<int>(a.u.size());
  out["delta_size"] = static_cast<int>(a.delta.size());
  out["group_size"] = static_cast<int>(a.group.size());
  out["verdict"] = a.verdict;
  if (!a.verdict) out["parity_separator"] = a.parity_separator;
  return out;
}

Json to_json(const SweepReport& r) {
  Json out;
  out["k"] = r.k;
  out["n"] = r.n;
  out["label_count"] = r.label_count;
  out["function_count"] = r.function_count;
  out["bucket_count"] = r.bucket_count;
  out["class_count"] = r.class_count;
  Json bad;
  bad["bucket_count"] = r.nonreconstructible_bucket_count;
  bad["class_count"] = r.nonreconstructible_class_count;
  Json samples = Json::array();
  for (const auto& sample : r.samples) {
    Json s;
    s["classes"] = sample.class_count;
    s["deck_cards"] = sample.deck_cards;
    s["representatives"] = sample.representatives;
    samples.push_back(s);
  }
  bad["samples"] = samples;
  out["nonreconstructible"] = bad;
  return out;
}

Json to_json(const SuiteReport& r) {
  Json out;
  out["suite"] = r.suite;
  out["passed"] = r.passed();
  Json checks = Json::array();
  for (const auto& check : r.checks) {
    Json c;
    c["name"] = check.name;
    c["status"] = check.pass ? "pass" : "fail";
    if (!check.details.empty()) c["details"] = check.details;
    checks.push_back(c);
  }
  out["checks"] = checks;
  return out;
}

}  // namespace minrec
