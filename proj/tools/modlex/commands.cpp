#include "commands.hpp"

#include <fstream>
#include <sstream>

#include "modlex/datasets.hpp"
#include "modlex/dp_engine.hpp"
#include "modlex/errors.hpp"
#include "modlex/io.hpp"

namespace modlex::cli {
namespace {

Json intervals_json(const NdpReport& report) {
  Json out = Json::array();
  for (const auto& i : non_dp_intervals(report)) out.push_back({i.a, i.b});
  return out;
}

Json quotient_json(const QuotientGraph& q) {
  return Json{{"graph", to_json(q.graph)}, {"parts", to_json(q.parts)}};
}

GraphFamily family_from(const Options& o, Graph base, std::vector<std::string>& warnings) {
  if (o.components.empty()) throw ParseError(0, "at least one --component is required");
  std::vector<Graph> components;
  for (const auto& spec : o.components) {
    auto loaded = resolve_graph_spec(spec);
    warnings.insert(warnings.end(), loaded.warnings.begin(), loaded.warnings.end());
    components.push_back(std::move(loaded.graph));
  }
  if (components.size() == 1) return GraphFamily::constant(std::move(base), components.front());
  return GraphFamily(std::move(base), std::move(components));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(0, std::string("certificate is not valid JSON: ") + e.what());
  }
}

}  // namespace

Outcome run_check_dp(const Options& o) {
  auto [g, warnings] = load_graph(o.source);
  std::string method = o.method;
  if (method == "auto") {
    method = "direct";
    if (g.order() >= 2 && is_connected(g) && minimal_quotient(g).graph.order() < g.order()) {
      method = "decomposition";
    }
  }
  Outcome out;
  out.warnings = std::move(warnings);
  if (method == "direct") {
    auto decision = is_dp(g, o.budget);
    out.body = {{"result", decision.dp},
                {"details",
                 {{"method", method},
                  {"order", g.order()},
                  {"ndp", decision.report.ndp},
                  {"intervals", intervals_json(decision.report)}}}};
    if (decision.certificate) out.body["certificate"] = to_json(*decision.certificate);
    out.exit_code = decision.dp ? 0 : 1;
  } else if (method == "decomposition") {
    auto r = certify_dp_via_decomposition(g, o.budget);
    out.body = {{"result", r.dp},
                {"details",
                 {{"method", method},
                  {"order", g.order()},
                  {"quotient", quotient_json(r.quotient)},
                  {"quotient_ndp", r.quotient_report.ndp}}}};
    if (r.certificate) out.body["certificate"] = to_json(*r.certificate);
    out.exit_code = r.dp ? 0 : 1;
  } else {
    throw ParseError(0, "unknown method '" + o.method + "'");
  }
  return out;
}

Outcome run_check_sdp(const Options& o) {
  auto [g, warnings] = load_graph(o.source);
  const auto order = sdp_order(g, o.budget);
  Outcome out{{{"result", order.has_value()}}, order ? 0 : 1, {}, std::move(warnings)};
  if (order) out.body["certificate"] = to_json(*order);
  return out;
}

Outcome run_ndp(const Options& o) {
  auto [g, warnings] = load_graph(o.source);
  const auto report = ndp_set(g, o.budget);
  Json witnesses = Json::object();
  for (const auto& [k, w] : report.witnesses) witnesses[std::to_string(k)] = to_json(w);
  return {{{"result",
            {{"order", report.order}, {"ndp", report.ndp}, {"intervals", intervals_json(report)}}},
           {"certificate", {{"kind", "witnesses"}, {"witnesses", std::move(witnesses)}}}},
          0,
          {},
          std::move(warnings)};
}

Outcome run_modules(const Options& o) {
  auto [g, warnings] = load_graph(o.source);
  const auto p = maximal_modular_partition(g);
  return {{{"result", {{"parts", to_json(p.parts)}, {"k2_case", p.k2_case}}}},
          0,
          {},
          std::move(warnings)};
}

Outcome run_quotient(const Options& o) {
  auto [g, warnings] = load_graph(o.source);
  const auto partition = o.partition.empty()
                             ? maximal_modular_partition(g)
                             : ModularPartition::from_parts(g, parse_partition(o.partition, g.order()));
  return {{{"result", quotient_json(quotient(g, partition))}}, 0, {}, std::move(warnings)};
}

Outcome run_minquotient(const Options& o) {
  auto [g, warnings] = load_graph(o.source);
  return {{{"result", quotient_json(minimal_quotient(g))}}, 0, {}, std::move(warnings)};
}

Outcome run_lexprod(const Options& o) {
  auto [base, warnings] = load_graph(o.source);
  const auto family = family_from(o, std::move(base), warnings);
  const auto product = generalized_lex_product(family);
  const auto report = ndp_set(family.base(), o.budget);
  const auto sizes = family.sizes();
  const bool dp = lex_product_is_dp(family.base(), report, sizes, o.budget);
  Json labels = Json::array();
  for (auto [u, x] : product.vertex_map) labels.push_back({u, x});
  Outcome out{{{"result", {{"graph", to_json(product.graph)}, {"vertices", labels}, {"dp", dp}}}},
              0,
              emit_edge_list(product.graph),
              std::move(warnings)};
  if (dp) out.body["certificate"] = to_json(construct_product_dp_certificate(family, report, o.budget));
  return out;
}

Outcome run_cartprod(const Options& o) {
  auto [g, warnings] = load_graph(o.source);
  if (o.factor.empty()) throw ParseError(0, "--factor is required");
  auto h = resolve_graph_spec(o.factor);
  warnings.insert(warnings.end(), h.warnings.begin(), h.warnings.end());
  const auto product = cartesian_product(g, h.graph);
  Outcome out{{{"result", {{"graph", to_json(product.graph)}}}},
              0,
              emit_edge_list(product.graph),
              std::move(warnings)};
  if (o.certify) {
    const auto g_order = sdp_order(g, o.budget);
    if (!g_order) throw PreconditionError("left factor has no sdp order");
    const auto h_dp = is_dp(h.graph, o.budget);
    if (!h_dp.certificate) throw PreconditionError("right factor is not dp");
    out.body["certificate"] = to_json(cartesian_dp_certificate(g, *g_order, h.graph, *h_dp.certificate));
  }
  return out;
}

Outcome run_transfer_check(const Options& o) {
  auto [base, warnings] = load_graph(o.source);
  const auto family = family_from(o, std::move(base), warnings);
  const auto product = generalized_lex_product(family);
  if (o.subset.empty()) throw ParseError(0, "--subset is required");
  const auto subset = parse_vertex_list(o.subset, product.graph.order());
  const bool by_projection = isometric_by_projection(family, product, subset);
  const bool direct = is_isometric(product.graph, subset);
  return {{{"result",
            {{"isometric", by_projection},
             {"direct", direct},
             {"agree", by_projection == direct},
             {"projection", to_json(project_pi(product, subset))}}}},
          0,
          {},
          std::move(warnings)};
}

Outcome run_verify(const Options& o) {
  if (o.conjecture_cartesian_dp) {
    const auto probe = probe_cartesian_dp(o.max_factor_order, o.budget);
    Json counterexample = nullptr;
    if (probe.counterexample) {
      counterexample = {{"g", to_json(probe.counterexample->first)},
                        {"h", to_json(probe.counterexample->second)}};
    }
    return {{{"result",
              {{"max_factor_order", o.max_factor_order},
               {"pairs_checked", probe.pairs_checked},
               {"counterexample", std::move(counterexample)}}}},
            0,
            {},
            {}};
  }
  auto [g, warnings] = load_graph(o.source);
  if (o.certificate_path.empty()) throw ParseError(0, "--certificate is required");
  Json doc = read_json_file(o.certificate_path);
  if (doc.contains("certificate")) doc = doc["certificate"];
  const std::string kind = doc.value("kind", "");
  bool valid = false;
  try {
    if (kind == "dp") {
      valid = verify_dp_certificate(g, dp_certificate_from_json(doc));
    } else if (kind == "sdp") {
      valid = verify_sdp_order(g, sdp_order_from_json(doc));
    } else {
      throw ParseError(0, "certificate kind must be 'dp' or 'sdp'");
    }
  } catch (const Json::exception& e) {
    throw ParseError(0, std::string("malformed certificate: ") + e.what());
  }
  return {{{"result", valid}, {"details", {{"kind", kind}}}}, valid ? 0 : 1, {}, std::move(warnings)};
}

Outcome run_export_dot(const Options& o) {
  auto [g, warnings] = load_graph(o.source);
  std::string dot;
  std::size_t clusters = 0;
  if (!o.components.empty()) {
    const auto product = generalized_lex_product(family_from(o, std::move(g), warnings));
    dot = emit_dot(product);
    clusters = product.offsets.size() - 1;
  } else if (o.quotient) {
    dot = emit_dot(minimal_quotient(g));
  } else {
    DotOptions options;
    if (o.maximal_partition) {
      options.clusters = maximal_modular_partition(g).parts;
    } else if (!o.partition.empty()) {
      options.clusters = ModularPartition::from_parts(g, parse_partition(o.partition, g.order())).parts;
    }
    if (options.clusters) clusters = options.clusters->size();
    dot = emit_dot(g, options);
  }
  if (!o.output_path.empty()) {
    std::ofstream file(o.output_path);
    if (!file) throw ParseError(0, "cannot write '" + o.output_path + "'");
    file << dot;
  }
  return {{{"result", {{"clusters", clusters}, {"dot", dot}}}}, 0, dot, std::move(warnings)};
}

Outcome run_dataset(const Options& o) {
  if (o.list || o.dataset_name.empty()) {
    Json list = Json::array();
    for (const auto& name : dataset_names()) {
      const auto d = load_dataset(name);
      list.push_back({{"name", d.name}, {"description", d.description}});
    }
    return {{{"result", std::move(list)}}, 0, {}, {}};
  }
  const auto d = load_dataset(o.dataset_name);
  std::ostringstream checksum;
  checksum << std::hex << d.checksum;
  return {{{"result",
            {{"name", d.name},
             {"description", d.description},
             {"checksum", checksum.str()},
             {"graph", to_json(d.graph)}}}},
          0,
          emit_edge_list(d.graph),
          {}};
}

}  // namespace modlex::cli
