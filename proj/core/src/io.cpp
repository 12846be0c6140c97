#include "bglab/io.hpp"

#include <fstream>
#include <sstream>

#include <zlib.h>

#include "bglab/errors.hpp"

namespace bglab {

  namespace {
    bool gzipped(std::filesystem::path const& path) {
      return path.extension() == ".gz";
    }

    nlohmann::json table_json(Table const& t) {
      auto rows = nlohmann::json::array();
      for (Element i = 0; i < t.size(); ++i) {
        auto const r = t.row(i);
        rows.push_back(std::vector<Element>(r.begin(), r.end()));
      }
      return rows;
    }

    Table table_from(nlohmann::json const& j, std::size_t n, char const* name) {
      if (!j.is_array() || j.size() != n) {
        throw InvalidAlgebra(std::string(name) + " must have " + std::to_string(n)
                             + " rows");
      }
      Table t(n);
      for (Element i = 0; i < n; ++i) {
        auto const& row = j[i];
        if (!row.is_array() || row.size() != n) {
          throw InvalidAlgebra(std::string(name) + " row " + std::to_string(i)
                               + " must have " + std::to_string(n) + " entries");
        }
        for (Element k = 0; k < n; ++k) {
          if (!row[k].is_number_unsigned()) {
            throw InvalidAlgebra(std::string(name) + " entries must be indices");
          }
          t.at(i, k) = row[k].get<Element>();
        }
      }
      return t;
    }

    void dump_table(std::ostringstream& os, Table const& t) {
      os << "[\n";
      for (Element i = 0; i < t.size(); ++i) {
        os << "    [";
        auto const r = t.row(i);
        for (std::size_t k = 0; k < r.size(); ++k) {
          os << (k ? "," : "") << r[k];
        }
        os << "]" << (i + 1 < t.size() ? ",\n" : "\n");
      }
      os << "  ]";
    }
  }  // namespace

  nlohmann::json to_json(FiniteAlgebra const& alg) {
    nlohmann::json j;
    j["kind"]   = std::string(to_string(alg.kind()));
    j["size"]   = alg.size();
    j["labels"] = alg.labels();
    j["mul"]    = table_json(alg.mul_table());
    if (alg.has_add()) {
      j["add"] = table_json(*alg.add_table());
    }
    if (alg.has_star()) {
      j["star"] = *alg.star_table();
    }
    j["meta"] = alg.meta();
    return j;
  }

  FiniteAlgebra from_json(nlohmann::json const& j) {
    try {
      if (!j.is_object()) {
        throw InvalidAlgebra("algebra must be a JSON object");
      }
      auto const kind = kind_from_string(j.at("kind").get<std::string>());
      auto const size = j.at("size").get<std::size_t>();
      auto labels     = j.at("labels").get<std::vector<std::string>>();
      if (labels.size() != size) {
        throw InvalidAlgebra("labels must have one entry per element");
      }
      auto                mul = table_from(j.at("mul"), size, "mul");
      std::optional<Table> add;
      if (j.contains("add")) {
        add = table_from(j["add"], size, "add");
      }
      std::optional<std::vector<Element>> star;
      if (j.contains("star")) {
        star = j["star"].get<std::vector<Element>>();
      }
      auto meta = j.value("meta", nlohmann::json::object());
      return FiniteAlgebra(kind,
                           std::move(labels),
                           std::move(mul),
                           std::move(add),
                           std::move(star),
                           std::move(meta));
    } catch (nlohmann::json::exception const& e) {
      throw InvalidAlgebra(std::string("malformed algebra file: ") + e.what());
    }
  }

  std::string dump_algebra(FiniteAlgebra const& alg) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"kind\": " << nlohmann::json(std::string(to_string(alg.kind()))).dump()
       << ",\n";
    os << "  \"size\": " << alg.size() << ",\n";
    os << "  \"labels\": " << nlohmann::json(alg.labels()).dump() << ",\n";
    os << "  \"mul\": ";
    dump_table(os, alg.mul_table());
    os << ",\n";
    if (alg.has_add()) {
      os << "  \"add\": ";
      dump_table(os, *alg.add_table());
      os << ",\n";
    }
    if (alg.has_star()) {
      os << "  \"star\": " << nlohmann::json(*alg.star_table()).dump() << ",\n";
    }
    os << "  \"meta\": " << alg.meta().dump() << "\n}\n";
    return os.str();
  }

  std::string read_text(std::filesystem::path const& path) {
    if (gzipped(path)) {
      gzFile f = gzopen(path.string().c_str(), "rb");
      if (f == nullptr) {
        throw Error("cannot open " + path.string());
      }
      std::string out;
      char        buf[1 << 16];
      int         got;
      while ((got = gzread(f, buf, sizeof(buf))) > 0) {
        out.append(buf, static_cast<std::size_t>(got));
      }
      bool const bad = got < 0;
      gzclose(f);
      if (bad) {
        throw Error("cannot decompress " + path.string());
      }
      return out;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("cannot open " + path.string());
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  void write_text(std::filesystem::path const& path, std::string const& text) {
    if (gzipped(path)) {
      gzFile f = gzopen(path.string().c_str(), "wb");
      if (f == nullptr) {
        throw Error("cannot write " + path.string());
      }
      auto const n = gzwrite(f, text.data(), static_cast<unsigned>(text.size()));
      gzclose(f);
      if (n != static_cast<int>(text.size())) {
        throw Error("cannot compress to " + path.string());
      }
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw Error("cannot write " + path.string());
    }
    out << text;
  }

  FiniteAlgebra load_algebra(std::filesystem::path const& path) {
    auto const text = read_text(path);
    auto const j    = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) {
      throw InvalidAlgebra(path.string() + " is not valid JSON");
    }
    return from_json(j);
  }

  void save_algebra(std::filesystem::path const& path, FiniteAlgebra const& alg) {
    write_text(path, dump_algebra(alg));
  }

  ElementSet element_set_from_json(FiniteAlgebra const& alg, nlohmann::json const& j) {
    if (!j.is_array()) {
      throw PreconditionFailed("element set must be a JSON array");
    }
    std::vector<Element> out;
    for (auto const& x : j) {
      if (x.is_string()) {
        out.push_back(alg.at(x.get<std::string>()));
      } else if (x.is_number_unsigned() && x.get<std::size_t>() < alg.size()) {
        out.push_back(x.get<Element>());
      } else {
        throw PreconditionFailed("element set entry " + x.dump()
                                 + " names no element");
      }
    }
    return normalized(std::move(out));
  }

}  // namespace bglab
