#include "fflat/io.hpp"

#include <fstream>

#include "fflat/errors.hpp"

namespace fflat {

namespace {

const Int kSafeInt = Int("9007199254740992");  // 2^53

}  // namespace

Json int_to_json(const Int& x) {
  if (abs(x) <= kSafeInt) return Json(static_cast<long long>(x.get_si()));
  return Json(x.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw InvalidInput("malformed integer string");
    return x;
  }
  throw InvalidInput("expected an integer");
}

Json lattice_to_json(const IntegerLattice& lattice) {
  Json basis = Json::array();
  for (const auto& row : lattice.basis()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(int_to_json(x));
    basis.push_back(std::move(r));
  }
  Json j;
  j["ambient_dim"] = lattice.ambient_dim();
  j["rank"] = lattice.rank();
  j["basis"] = std::move(basis);
  j["labels"] = lattice.labels();
  j["function_field"] = lattice.function_field();
  return j;
}

IntegerLattice lattice_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("basis")) throw InvalidInput("lattice JSON needs a basis");
    IntMat basis;
    for (const auto& r : j.at("basis")) {
      if (!r.is_array()) throw InvalidInput("basis rows must be arrays");
      IntVec row;
      for (const auto& x : r) row.push_back(int_from_json(x));
      basis.push_back(std::move(row));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    const bool ff = j.value("function_field", false);
    IntegerLattice l(std::move(basis), std::move(labels), ff);
    if (j.contains("ambient_dim") && j.at("ambient_dim").get<std::size_t>() != l.ambient_dim())
      throw InvalidInput("ambient_dim does not match the basis");
    if (j.contains("rank") && j.at("rank").get<std::size_t>() != l.rank())
      throw InvalidInput("rank does not match the basis");
    return l;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed lattice JSON: ") + e.what());
  }
}

Json places_to_json(const PlaceSystem& system) {
  Json places = Json::array();
  for (const auto& pl : system.places) {
    Json p;
    p["kind"] = to_string(pl.kind);
    p["label"] = pl.label();
    p["degree"] = pl.degree;
    if (pl.kind == PlaceKind::Infinity)
      p["beta_or_alpha"] = nullptr;
    else
      p["beta_or_alpha"] = pl.x;
    if (pl.kind == PlaceKind::Split) {
      p["sheet"] = pl.sheet;
      p["y"] = pl.y;
    }
    places.push_back(std::move(p));
  }
  Json j;
  j["selector"] = to_string(system.selector);
  j["places"] = std::move(places);
  j["r"] = system.r;
  j["s"] = system.s;
  j["t"] = system.t;
  return j;
}

HyperellipticModel curve_from_json(const Json& j) {
  try {
    const auto p = j.at("p").get<long long>();
    if (p < 3 || p > 2147483647LL) throw InvalidInput("p must be an odd prime below 2^31");
    return HyperellipticModel(static_cast<std::uint32_t>(p), j.at("f").get<std::vector<long long>>());
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed curve JSON: ") + e.what());
  }
}

Json curve_to_json(const HyperellipticModel& model) {
  Json j;
  j["p"] = model.p();
  std::vector<long long> f;
  for (auto c : model.f().coeffs()) f.push_back(c);
  j["f"] = f;
  return j;
}

Json isometry_report_to_json(const IsometryReport& report) {
  Json j;
  j["order"] = report.order.get_str();
  Json fac = Json::array();
  for (const auto& [p, e] : report.factored) fac.push_back(Json::array({int_to_json(p), e}));
  j["factored"] = std::move(fac);
  j["includes_minus_id"] = report.includes_minus_id;
  Json gens = Json::array();
  for (const auto& g : report.generators) {
    Json mat = Json::array();
    for (const auto& row : g) {
      Json r = Json::array();
      for (const auto& x : row) r.push_back(int_to_json(x));
      mat.push_back(std::move(r));
    }
    gens.push_back(std::move(mat));
  }
  j["generators"] = std::move(gens);
  return j;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInput("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace fflat
