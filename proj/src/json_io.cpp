#include "picod/json_io.hpp"

#include <algorithm>

namespace picod {

using nlohmann::json;

PicodInstance instance_from_json(const json& doc, std::vector<std::string>* warnings) {
  if (!doc.is_object() || !doc.contains("m") || !doc.contains("clients"))
    throw std::invalid_argument("instance document must be an object with \"m\" and \"clients\"");
  if (!doc["m"].is_number_integer()) throw std::invalid_argument("\"m\" must be an integer");
  const int m = doc["m"].get<int>();
  if (m < 1) throw std::invalid_argument("message count must be at least 1");
  if (m > kMaxMessages) throw std::invalid_argument("at most " + std::to_string(kMaxMessages) + " messages supported");
  if (!doc["clients"].is_array()) throw std::invalid_argument("\"clients\" must be an array of arrays");

  std::vector<MsgSet> clients;
  for (const auto& entry : doc["clients"]) {
    if (!entry.is_array()) throw std::invalid_argument("each client must be an array of message indices");
    MsgSet s = 0;
    for (const auto& v : entry) {
      if (!v.is_number_integer()) throw std::invalid_argument("message indices must be integers");
      const int j = v.get<int>();
      if (j < 1 || j > m)
        throw std::invalid_argument("message index " + std::to_string(j) + " outside 1.." + std::to_string(m));
      s |= msg_bit(j);
    }
    if (s == full_set(m))
      throw std::invalid_argument("side-information set " + set_repr(s) + " equals the full message set");
    if (std::find(clients.begin(), clients.end(), s) != clients.end()) {
      if (warnings) warnings->push_back("duplicate side-information set " + set_repr(s) + " collapsed");
      continue;
    }
    clients.push_back(s);
  }
  return make_instance(m, std::move(clients));
}

PicodInstance parse_instance(const std::string& text, std::vector<std::string>* warnings) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  return instance_from_json(doc, warnings);
}

json to_json(const PicodInstance& inst) {
  json clients = json::array();
  for (MsgSet s : inst.clients) clients.push_back(set_elements(s));
  return json{{"m", inst.m}, {"clients", clients}};
}

LinearScheme scheme_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("q") || !doc.contains("rows"))
    throw std::invalid_argument("scheme document must be an object with \"q\" and \"rows\"");
  if (!doc["q"].is_number_integer()) throw std::invalid_argument("\"q\" must be an integer");
  const int q = doc["q"].get<int>();
  if (!doc["rows"].is_array()) throw std::invalid_argument("\"rows\" must be an array of coefficient rows");
  std::vector<std::vector<int>> rows;
  for (const auto& r : doc["rows"]) {
    if (!r.is_array()) throw std::invalid_argument("each row must be an array of coefficients");
    rows.push_back(r.get<std::vector<int>>());
  }
  return make_scheme(q, rows);
}

LinearScheme parse_scheme(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  return scheme_from_json(doc);
}

json to_json(const LinearScheme& s) {
  json rows = json::array();
  for (int r = 0; r < s.length(); ++r) {
    json row = json::array();
    for (int c = 0; c < s.messages(); ++c) row.push_back(static_cast<int>(s.A.at(r, c)));
    rows.push_back(row);
  }
  return json{{"q", s.q()}, {"rows", rows}};
}

json to_json(const NestedCollection& nc) {
  json levels = json::array();
  for (const auto& level : nc.levels) levels.push_back(level);
  return levels;
}

json demand_to_json(const DemandFunction& d) {
  json out = json::object();
  for (size_t i = 0; i < d.size(); ++i) out[std::to_string(i + 1)] = d[i];
  return out;
}

json to_json(const BoundReport& rep) {
  json out = json::object();
  if (rep.eta_lb) {
    out["eta_lb"] = rep.eta_lb->value;
    out["eta_lb_root"] = rep.eta_lb->root;
    out["eta_lb_witness"] = to_json(rep.eta_lb->witness);
  }
  if (rep.eta_exact) out["eta_exact"] = *rep.eta_exact;
  if (rep.tau1) {
    out["tau1"] = rep.tau1->value;
    out["tau1_witness"] = demand_to_json(rep.tau1->witness);
  }
  if (rep.tau2) {
    out["tau2"] = rep.tau2->value;
    out["tau2_witness"] = demand_to_json(rep.tau2->witness);
  }
  if (rep.absent_chain) {
    out["absent_chain_bound"] = rep.absent_chain->bound;
    out["absent_chain_length"] = rep.absent_chain->chain_length;
    json chain = json::array();
    for (MsgSet s : rep.absent_chain->chain) chain.push_back(set_elements(s));
    out["absent_chain_witness"] = chain;
  }
  if (rep.absent_union) out["absent_union_bound"] = *rep.absent_union;
  if (rep.absent_nesting) out["absent_nesting_bound"] = *rep.absent_nesting;
  if (rep.sigma) out["sigma_bound"] = *rep.sigma;
  out["best_lower"] = rep.best_lower;
  out["best_name"] = rep.best_name;
  return out;
}

json to_json(const ExactResult& res) {
  return json{{"q", res.q},
              {"beta_lin", res.beta_lin},
              {"witness", to_json(res.witness)},
              {"certified", res.certified},
              {"lower_used", res.lower_used},
              {"best_lower", res.best_lower},
              {"bounds", to_json(res.bounds)}};
}

json to_json(const SmallCaseResult& res) {
  json out{{"case_label", small_case_name(res.label)},
           {"beta", res.beta},
           {"tau2", res.tau2},
           {"tau1", res.tau1},
           {"eta", res.eta}};
  if (res.scheme) out["scheme"] = to_json(*res.scheme);
  if (res.collection) out["collection"] = to_json(*res.collection);
  return out;
}

json to_json(const CrosscheckReport& rep) {
  json entries = json::array();
  for (const auto& e : rep.entries) {
    entries.push_back(json{{"instance", to_json(e.instance)},
                           {"case_label", small_case_name(e.predicted.label)},
                           {"lemma_values",
                            json{{"beta", e.predicted.beta},
                                 {"tau2", e.predicted.tau2},
                                 {"tau1", e.predicted.tau1},
                                 {"eta", e.predicted.eta}}},
                           {"computed_values",
                            json{{"beta2", e.beta2}, {"beta3", e.beta3}, {"tau2", e.tau2}, {"tau1", e.tau1},
                                 {"eta", e.eta}}},
                           {"match", e.match}});
  }
  return json{{"instances_checked", rep.instances_checked}, {"mismatches", rep.mismatches}, {"entries", entries}};
}

}  // namespace picod
