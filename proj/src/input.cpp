#include "holonomy/input.hpp"

#include <cctype>
#include <charconv>

#include "holonomy/errors.hpp"
#include "json.hpp"

namespace holonomy {

  namespace {

    // lines[g], when given, is the source line of generator g.
    void validate(InputDocument const& doc, std::vector<std::size_t> const* lines = nullptr) {
      if (doc.degree == 0 || doc.degree > kMaxDegree) {
        throw ParseError("field \"n\": degree must lie in [1..64], got "
                         + std::to_string(doc.degree));
      }
      if (doc.generators.empty()) {
        throw ParseError("field \"generators\": at least one generator is required");
      }
      for (std::size_t g = 0; g < doc.generators.size(); ++g) {
        auto const& images = doc.generators[g];
        std::string const where
            = lines == nullptr
                  ? "field \"generators\"[" + std::to_string(g + 1) + "]"
                  : "line " + std::to_string((*lines)[g]) + ", generator " + std::to_string(g + 1);
        if (images.size() != doc.degree) {
          throw ParseError(where + ": expected " + std::to_string(doc.degree)
                           + " images, got " + std::to_string(images.size()));
        }
        for (std::size_t i = 0; i < images.size(); ++i) {
          if (images[i] < 1 || static_cast<std::size_t>(images[i]) > doc.degree) {
            throw ParseError(where + ": image " + std::to_string(images[i])
                             + " of point " + std::to_string(i + 1)
                             + " lies outside [1.." + std::to_string(doc.degree)
                             + "]");
          }
        }
      }
      if (!doc.names.empty() && doc.names.size() != doc.generators.size()) {
        throw ParseError("field \"names\": got " + std::to_string(doc.names.size())
                         + " names for " + std::to_string(doc.generators.size())
                         + " generators");
      }
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

    long long parse_integer(std::string_view s, std::string const& where) {
      s              = trim(s);
      long long value = 0;
      auto [ptr, ec]  = std::from_chars(s.data(), s.data() + s.size(), value);
      if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError(where + ": expected an integer, got \"" + std::string(s)
                         + "\"");
      }
      return value;
    }

  }  // namespace

  GeneratorSet InputDocument::generator_set() const {
    std::vector<Transformation> gens;
    gens.reserve(generators.size());
    for (auto const& images : generators) {
      gens.push_back(Transformation::from_one_based(images));
    }
    return GeneratorSet(std::move(gens), names);
  }

  InputDocument parse_json_input(std::string_view text) {
    using nlohmann::json;
    json doc;
    try {
      doc = json::parse(text.begin(), text.end());
    } catch (json::parse_error const& e) {
      // byte offset -> line number
      std::size_t const offset = std::min<std::size_t>(e.byte, text.size());
      std::size_t       line   = 1;
      for (std::size_t i = 0; i + 1 < offset; ++i) {
        line += text[i] == '\n';
      }
      throw ParseError("line " + std::to_string(line) + ": invalid JSON ("
                       + e.what() + ")");
    }
    if (!doc.is_object()) {
      throw ParseError("line 1: the document must be a JSON object");
    }
    InputDocument out;
    try {
      if (!doc.contains("n")) {
        throw ParseError("field \"n\": missing");
      }
      if (!doc["n"].is_number_unsigned()) {
        throw ParseError("field \"n\": expected a positive integer");
      }
      out.degree = doc["n"].get<std::size_t>();
      if (!doc.contains("generators") || !doc["generators"].is_array()) {
        throw ParseError("field \"generators\": expected an array of image lists");
      }
      for (std::size_t g = 0; g < doc["generators"].size(); ++g) {
        json const& images = doc["generators"][g];
        if (!images.is_array()) {
          throw ParseError("field \"generators\"[" + std::to_string(g + 1)
                           + "]: expected an array of integers");
        }
        std::vector<int> list;
        for (json const& x : images) {
          if (!x.is_number_integer()) {
            throw ParseError("field \"generators\"[" + std::to_string(g + 1)
                             + "]: expected integers, got " + x.dump());
          }
          list.push_back(x.get<int>());
        }
        out.generators.push_back(std::move(list));
      }
      if (doc.contains("names")) {
        if (!doc["names"].is_array()) {
          throw ParseError("field \"names\": expected an array of strings");
        }
        for (json const& x : doc["names"]) {
          if (!x.is_string()) {
            throw ParseError("field \"names\": expected strings, got " + x.dump());
          }
          out.names.push_back(x.get<std::string>());
        }
      }
      if (doc.contains("budget")) {
        if (!doc["budget"].is_number_unsigned()) {
          throw ParseError("field \"budget\": expected a positive integer");
        }
        out.budget = doc["budget"].get<std::size_t>();
      }
      if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned()) {
          throw ParseError("field \"seed\": expected a nonnegative integer");
        }
        out.seed = doc["seed"].get<std::uint64_t>();
      }
    } catch (json::exception const& e) {
      throw ParseError(std::string("invalid field value (") + e.what() + ")");
    }
    validate(out);
    return out;
  }

  InputDocument parse_text_input(std::string_view text) {
    InputDocument            out;
    std::vector<std::size_t> lines;
    bool                     have_degree = false;
    std::size_t   line        = 1;
    std::size_t   pos         = 0;
    while (pos <= text.size()) {
      std::size_t end = pos;
      while (end < text.size() && text[end] != ';' && text[end] != '\n') {
        ++end;
      }
      std::string_view stmt = text.substr(pos, end - pos);
      if (auto hash = stmt.find('#'); hash != std::string_view::npos) {
        stmt = stmt.substr(0, hash);
      }
      stmt                    = trim(stmt);
      std::string const where = "line " + std::to_string(line);
      if (!stmt.empty()) {
        std::string_view key;
        std::string_view value = stmt;
        if (auto eq = stmt.find('='); eq != std::string_view::npos) {
          key   = trim(stmt.substr(0, eq));
          value = trim(stmt.substr(eq + 1));
        }
        if (key == "n") {
          long long n = parse_integer(value, where + ", field \"n\"");
          if (n < 1) {
            throw ParseError(where + ", field \"n\": degree must be positive");
          }
          out.degree  = static_cast<std::size_t>(n);
          have_degree = true;
        } else if (key == "budget") {
          long long b = parse_integer(value, where + ", field \"budget\"");
          if (b < 1) {
            throw ParseError(where + ", field \"budget\": must be positive");
          }
          out.budget = static_cast<std::size_t>(b);
        } else if (key == "seed") {
          long long s = parse_integer(value, where + ", field \"seed\"");
          if (s < 0) {
            throw ParseError(where + ", field \"seed\": must be nonnegative");
          }
          out.seed = static_cast<std::uint64_t>(s);
        } else {
          std::string const field
              = where + ", generator " + std::to_string(out.generators.size() + 1);
          if (value.size() < 2 || value.front() != '[' || value.back() != ']') {
            throw ParseError(field + ": expected an image list like [2,1,3], got \""
                             + std::string(value) + "\"");
          }
          std::vector<int> images;
          std::string_view body = trim(value.substr(1, value.size() - 2));
          while (!body.empty()) {
            std::size_t comma = body.find_first_of(", ");
            std::string_view tok = body.substr(0, comma);
            if (!trim(tok).empty()) {
              images.push_back(static_cast<int>(parse_integer(tok, field)));
            }
            body = comma == std::string_view::npos ? std::string_view{}
                                                   : body.substr(comma + 1);
          }
          if (!key.empty()) {
            out.names.push_back(std::string(key));
          } else if (!out.names.empty()) {
            throw ParseError(field + ": either name every generator or none");
          }
          if (!out.names.empty() && out.names.size() != out.generators.size() + 1) {
            throw ParseError(field + ": either name every generator or none");
          }
          out.generators.push_back(std::move(images));
          lines.push_back(line);
        }
      }
      if (end < text.size() && text[end] == '\n') {
        ++line;
      }
      pos = end + 1;
    }
    if (!have_degree) {
      if (out.generators.empty()) {
        throw ParseError("line 1, field \"n\": missing");
      }
      out.degree = out.generators.front().size();
    }
    validate(out, &lines);
    return out;
  }

  InputDocument parse_input(std::string_view text) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        continue;
      }
      return c == '{' ? parse_json_input(text) : parse_text_input(text);
    }
    throw ParseError("line 1: empty input");
  }

}  // namespace holonomy
