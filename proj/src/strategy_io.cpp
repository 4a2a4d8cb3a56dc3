#include "idgames/strategy_io.hpp"

#include "idgames/error.hpp"

namespace idg {
namespace {

nlohmann::json matrix_to_json(const CMatrix& m) {
  nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json rr = nlohmann::json::array(), ir = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      rr.push_back(m(i, j).real());
      ir.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  return {{"re", re}, {"im", im}};
}

CMatrix matrix_from_json(const nlohmann::json& doc, int dim) {
  const auto& re = doc.at("re");
  const auto& im = doc.at("im");
  if (re.size() != static_cast<std::size_t>(dim) || im.size() != static_cast<std::size_t>(dim)) {
    throw Error(ErrorCode::kParse, "effect matrix has the wrong size");
  }
  CMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (re[i].size() != static_cast<std::size_t>(dim) || im[i].size() != static_cast<std::size_t>(dim)) {
      throw Error(ErrorCode::kParse, "effect matrix has the wrong size");
    }
    for (int j = 0; j < dim; ++j) m(i, j) = Complex(re[i][j].get<double>(), im[i][j].get<double>());
  }
  return m;
}

}  // namespace

nlohmann::json strategy_to_json(const QuantumStrategy& qs) {
  nlohmann::json doc;
  doc["dims"] = qs.dims;
  nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
  for (const auto& c : qs.state) {
    re.push_back(c.real());
    im.push_back(c.imag());
  }
  doc["state"] = {{"re", re}, {"im", im}};
  nlohmann::json effects = nlohmann::json::array();
  for (const auto& player : qs.effects) {
    nlohmann::json p = nlohmann::json::array();
    for (const auto& meas : player) {
      nlohmann::json m = nlohmann::json::array();
      for (const auto& e : meas) m.push_back(matrix_to_json(e));
      p.push_back(std::move(m));
    }
    effects.push_back(std::move(p));
  }
  doc["effects"] = std::move(effects);
  return doc;
}

QuantumStrategy strategy_from_json(const nlohmann::json& doc) {
  try {
    QuantumStrategy qs;
    qs.dims = doc.at("dims").get<std::vector<int>>();
    for (int d : qs.dims) {
      if (d < 1) throw Error(ErrorCode::kParse, "dimensions must be positive");
    }
    const auto re = doc.at("state").at("re").get<std::vector<double>>();
    const auto im = doc.at("state").at("im").get<std::vector<double>>();
    if (re.size() != im.size() || re.size() != static_cast<std::size_t>(qs.total_dim())) {
      throw Error(ErrorCode::kParse, "state length does not match the dimensions");
    }
    qs.state.resize(static_cast<Eigen::Index>(re.size()));
    for (std::size_t i = 0; i < re.size(); ++i) qs.state(static_cast<Eigen::Index>(i)) = Complex(re[i], im[i]);
    const auto& effects = doc.at("effects");
    if (effects.size() != qs.dims.size()) throw Error(ErrorCode::kParse, "one effect list per player is required");
    for (std::size_t k = 0; k < effects.size(); ++k) {
      auto& player = qs.effects.emplace_back();
      for (const auto& meas : effects[k]) {
        auto& m = player.emplace_back();
        for (const auto& e : meas) m.push_back(matrix_from_json(e, qs.dims[k]));
      }
    }
    return qs;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed strategy document: ") + e.what());
  }
}

}  // namespace idg
