#include "baxter/json_io.hpp"

#include "baxter/error.hpp"

namespace baxter {

namespace {

Json precedences(PrecedenceSet const& s, bool right) {
  Json arr = Json::array();
  for (Precedence p : s.entries) {
    arr.push_back(right ? Json::array({p.hi, p.lo, p.index}) : Json::array({p.lo, p.hi, p.index}));
  }
  return arr;
}

PrecedenceSet precedences_from(Json const& arr, bool right) {
  PrecedenceSet s;
  for (auto const& e : arr) {
    if (!e.is_array() || e.size() != 3) {
      throw PreconditionError("precedence entries must be triples");
    }
    Precedence p;
    p.index = e[2].get<int>();
    if (right) {
      p.hi = e[0].get<int>();
      p.lo = e[1].get<int>();
    } else {
      p.lo = e[0].get<int>();
      p.hi = e[1].get<int>();
    }
    s.entries.push_back(p);
  }
  return s;
}

Json node_json(BST::Node const* n) {
  if (!n) {
    return nullptr;
  }
  return {{"label", n->label}, {"left", node_json(n->left.get())}, {"right", node_json(n->right.get())}};
}

Json entry(Tropical t) { return t.is_zero() ? Json("-inf") : Json(t.value()); }

}  // namespace

Json to_json(BaxtElement const& e) {
  Key const& k = e.key();
  return {{"n", k.rank},
          {"representative", to_string(e.representative())},
          {"ev", k.ev.counts},
          {"lpi", precedences(k.lpi, false)},
          {"rpi", precedences(k.rpi, true)}};
}

BaxtElement element_from_json(Json const& j) {
  try {
    int rank = j.at("n").get<int>();
    AWord rep = parse_aword(j.at("representative").get<std::string>(), rank);
    Key key{rank, EvVector{j.at("ev").get<std::vector<int>>()},
            precedences_from(j.at("lpi"), false), precedences_from(j.at("rpi"), true)};
    return BaxtElement(std::move(rep), std::move(key));
  } catch (nlohmann::json::exception const& e) {
    throw PreconditionError(std::string("malformed element JSON: ") + e.what());
  }
}

Json to_json(BST const& t) { return node_json(t.root()); }

Json to_json(UTMatrix<Tropical> const& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) {
      row.push_back(entry(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return {{"dim", m.dim()}, {"entries", std::move(rows)}};
}

UTMatrix<Tropical> matrix_from_json(Json const& j) {
  try {
    auto dim = j.at("dim").get<std::size_t>();
    auto const& rows = j.at("entries");
    if (rows.size() != dim) {
      throw PreconditionError("matrix JSON has " + std::to_string(rows.size()) + " rows, expected " +
                              std::to_string(dim));
    }
    std::vector<std::vector<Tropical>> values(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (auto const& v : rows[i]) {
        if (v.is_string()) {
          if (v.get<std::string>() != "-inf") {
            throw PreconditionError("matrix entry must be an integer or \"-inf\"");
          }
          values[i].push_back(Tropical::zero());
        } else {
          values[i].emplace_back(v.get<std::int64_t>());
        }
      }
    }
    return UTMatrix<Tropical>::from_rows(values);
  } catch (nlohmann::json::exception const& e) {
    throw PreconditionError(std::string("malformed matrix JSON: ") + e.what());
  }
}

Json to_json(PairTuple const& t) {
  Json coords = Json::array();
  for (std::size_t c = 0; c < t.coords.size(); ++c) {
    coords.push_back({{"i", t.index[c].first},
                      {"j", t.index[c].second},
                      {"first", to_json(t.coords[c].first)},
                      {"second", to_json(t.coords[c].second)}});
  }
  return {{"n", t.rank}, {"coords", std::move(coords)}};
}

Json to_json(CheckReport const& r) {
  Json j = {{"verdict", to_string(r.verdict)},
            {"n", r.rank},
            {"mode", to_string(r.mode)},
            {"violated", to_string(r.violated)}};
  if (r.witness) {
    Json vars = Json::array();
    for (IVar x : r.witness->vars) {
      vars.push_back(to_string(x));
    }
    j["witness"] = {{"vars", vars}, {"side", r.witness->side}, {"detail", r.witness->detail}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(Substitution const& s) {
  Json j = Json::object();
  for (auto const& [x, e] : s.values) {
    j[base_name(x)] = to_string(e.representative());
  }
  return j;
}

}  // namespace baxter
