#include "nucube/trace_json.hpp"

#include <unordered_map>

#include "nucube/syntax.hpp"

namespace nucube {

using nlohmann::json;

json report_to_json(const SatisfactionReport& r) {
  json w = json::array();
  for (const auto& x : r.witnesses) {
    if (x) {
      w.push_back(*x);
    } else {
      w.push_back(nullptr);
    }
  }
  return {{"holds", r.holds}, {"branch_count", r.branch_count}, {"witnesses", w}};
}

SatisfactionReport report_from_json(const json& j) {
  SatisfactionReport r;
  try {
    r.holds = j.at("holds").get<bool>();
    r.branch_count = j.at("branch_count").get<std::size_t>();
    for (const json& w : j.at("witnesses")) {
      if (w.is_null()) {
        r.witnesses.emplace_back(std::nullopt);
      } else {
        r.witnesses.emplace_back(w.get<std::size_t>());
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed satisfaction report: ") + e.what());
  }
  return r;
}

json derivation_to_json(const DerivationPtr& root) {
  std::unordered_map<const Derivation*, std::size_t> ids;
  json nodes = json::array();
  // iterative post-order so deep derivations do not exhaust the stack
  std::vector<std::pair<const Derivation*, bool>> stack{{root.get(), false}};
  while (!stack.empty()) {
    auto [d, expanded] = stack.back();
    stack.pop_back();
    if (ids.contains(d)) continue;
    if (!expanded) {
      stack.push_back({d, true});
      for (auto it = d->premises.rbegin(); it != d->premises.rend(); ++it) {
        if (!ids.contains(it->get())) stack.push_back({it->get(), false});
      }
      continue;
    }
    json premises = json::array();
    for (const DerivationPtr& p : d->premises) premises.push_back(ids.at(p.get()));
    std::size_t id = nodes.size();
    json n = {{"id", id},
              {"rule", to_string(d->rule)},
              {"context", print_context(d->conclusion.context)},
              {"subject", print_term(d->conclusion.subject)},
              {"type", print_term(d->conclusion.type)},
              {"premises", premises}};
    if (d->satisfaction) n["satisfaction"] = report_to_json(*d->satisfaction);
    nodes.push_back(std::move(n));
    ids.emplace(d, id);
  }
  return {{"root", ids.at(root.get())}, {"nodes", nodes}};
}

DerivationPtr derivation_from_json(const json& j) {
  std::vector<DerivationPtr> built;
  std::unordered_map<std::string, Context> contexts;
  try {
    for (const json& n : j.at("nodes")) {
      if (n.at("id").get<std::size_t>() != built.size()) {
        throw Error(ErrorKind::InvalidArgument, "node ids must be consecutive from 0");
      }
      auto rule = parse_rule_name(n.at("rule").get<std::string>());
      if (!rule) throw Error(ErrorKind::InvalidArgument, "unknown rule '" + n.at("rule").get<std::string>() + "'");
      std::string ctx_text = n.at("context").get<std::string>();
      auto it = contexts.find(ctx_text);
      if (it == contexts.end()) it = contexts.emplace(ctx_text, parse_context(ctx_text)).first;
      const Context& ctx = it->second;
      Derivation d{*rule,
                   Judgement{ctx, parse_term(n.at("subject").get<std::string>(), ctx),
                             parse_term(n.at("type").get<std::string>(), ctx)},
                   {},
                   std::nullopt};
      for (const json& p : n.at("premises")) {
        std::size_t k = p.get<std::size_t>();
        if (k >= built.size()) throw Error(ErrorKind::InvalidArgument, "premise refers to a later node");
        d.premises.push_back(built[k]);
      }
      if (n.contains("satisfaction")) d.satisfaction = report_from_json(n.at("satisfaction"));
      built.push_back(std::make_shared<const Derivation>(std::move(d)));
    }
    std::size_t root = j.at("root").get<std::size_t>();
    if (root >= built.size()) throw Error(ErrorKind::InvalidArgument, "root id out of range");
    return built[root];
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed derivation: ") + e.what());
  }
}

}  // namespace nucube
