#include "monowalk_cli/render.hpp"

#include <sstream>

namespace monowalk::cli {

  void put_rational(Json& obj, std::string const& key, Rational const& q, bool floats) {
    obj[key] = to_string(q);
    if (floats) {
      obj[key + "_decimal"] = to_decimal(q);
    }
  }

  void put_distribution(Json&                        obj,
                        std::string const&           key,
                        StateSpace const&            states,
                        std::vector<Rational> const& pi,
                        bool                         floats) {
    Json exact = Json::object(), approx = Json::object();
    for (std::size_t i = 0; i < pi.size(); ++i) {
      exact[states.label(static_cast<StateIndex>(i))] = to_string(pi[i]);
      approx[states.label(static_cast<StateIndex>(i))] = to_decimal(pi[i]);
    }
    obj[key] = std::move(exact);
    if (floats) {
      obj[key + "_decimal"] = std::move(approx);
    }
  }

  namespace {
    std::string scalar(Json const& v) {
      if (v.is_string()) {
        return v.get<std::string>();
      }
      return v.dump();
    }

    std::string csv_field(std::string const& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
      }
      std::string out = "\"";
      for (char c : s) {
        if (c == '"') {
          out += '"';
        }
        out += c;
      }
      return out + "\"";
    }

    void flatten(Json const& v, std::string const& path, std::ostringstream& os) {
      if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
          flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
        }
      } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) {
          flatten(v[i], path + "[" + std::to_string(i) + "]", os);
        }
      } else {
        os << csv_field(path) << ',' << csv_field(scalar(v)) << '\n';
      }
    }

    void outline(Json const& v, int depth, std::ostringstream& os) {
      std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
      if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
          if (it.value().is_structured() && !it.value().empty()) {
            os << pad << it.key() << ":\n";
            outline(it.value(), depth + 1, os);
          } else {
            os << pad << it.key() << ": " << scalar(it.value()) << '\n';
          }
        }
      } else if (v.is_array()) {
        for (auto const& item : v) {
          if (item.is_structured() && !item.empty()) {
            os << pad << "-\n";
            outline(item, depth + 1, os);
          } else {
            os << pad << "- " << scalar(item) << '\n';
          }
        }
      } else {
        os << pad << scalar(v) << '\n';
      }
    }
  }  // namespace

  std::string render(Json const& doc, Format format) {
    std::ostringstream os;
    switch (format) {
      case Format::Json: return doc.dump(2) + "\n";
      case Format::Csv:
        os << "path,value\n";
        flatten(doc, "", os);
        return os.str();
      case Format::Text: outline(doc, 0, os); return os.str();
    }
    return {};
  }

}  // namespace monowalk::cli
