#include "tlc/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tlc/errors.hpp"

namespace tlc {

using nlohmann::ordered_json;

namespace {

ordered_json parse_document(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw InputError("malformed JSON document");
  }
  return j;
}

ordered_json monoid_obj(const FiniteMonoid& m) {
  ordered_json rows = ordered_json::array();
  for (int s = 0; s < m.size(); ++s) {
    ordered_json row = ordered_json::array();
    for (int t = 0; t < m.size(); ++t) {
      row.push_back(m.mul(s, t));
    }
    rows.push_back(std::move(row));
  }
  return ordered_json{{"size", m.size()}, {"identity", m.identity()}, {"table", std::move(rows)}};
}

MonoidPtr monoid_from_obj(const ordered_json& j) {
  try {
    const int size = j.at("size").get<int>();
    const int identity = j.at("identity").get<int>();
    std::vector<int> table;
    table.reserve(static_cast<std::size_t>(size) * size);
    for (const auto& row : j.at("table")) {
      if (static_cast<int>(row.size()) != size) {
        throw InputError("table row has wrong length");
      }
      for (const auto& v : row) {
        table.push_back(v.get<int>());
      }
    }
    if (static_cast<int>(j.at("table").size()) != size) {
      throw InputError("table has wrong number of rows");
    }
    return std::make_shared<FiniteMonoid>(size, std::move(table), identity);
  } catch (const ordered_json::exception& e) {
    throw InputError(std::string("bad monoid document: ") + e.what());
  }
}

ordered_json alphabet_array(const std::vector<char>& alphabet) {
  ordered_json arr = ordered_json::array();
  for (char a : alphabet) {
    arr.push_back(std::string(1, a));
  }
  return arr;
}

std::vector<char> alphabet_from(const ordered_json& arr) {
  std::string letters;
  for (const auto& v : arr) {
    const std::string s = v.get<std::string>();
    if (s.size() != 1) {
      throw InputError("alphabet letters must be single characters");
    }
    letters += s;
  }
  return make_alphabet(letters);
}

}  // namespace

std::string monoid_to_json(const FiniteMonoid& m) { return monoid_obj(m).dump(); }

MonoidPtr monoid_from_json(const std::string& text) {
  return monoid_from_obj(parse_document(text));
}

std::string dfa_to_json(const Dfa& d) {
  ordered_json delta = ordered_json::array();
  for (int q = 0; q < d.states; ++q) {
    ordered_json row = ordered_json::object();
    for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
      row[std::string(1, d.alphabet[a])] = d.step(q, static_cast<int>(a));
    }
    delta.push_back(std::move(row));
  }
  ordered_json accepting = ordered_json::array();
  for (int q = 0; q < d.states; ++q) {
    if (d.accepting[q]) {
      accepting.push_back(q);
    }
  }
  return ordered_json{{"alphabet", alphabet_array(d.alphabet)},
                      {"states", d.states},
                      {"initial", d.initial},
                      {"accepting", std::move(accepting)},
                      {"delta", std::move(delta)}}
      .dump();
}

Dfa dfa_from_json(const std::string& text) {
  const ordered_json j = parse_document(text);
  try {
    Dfa d;
    d.alphabet = alphabet_from(j.at("alphabet"));
    d.states = j.at("states").get<int>();
    d.initial = j.at("initial").get<int>();
    if (d.states <= 0) {
      throw InputError("automaton needs at least one state");
    }
    if (d.initial < 0 || d.initial >= d.states) {
      throw InputError("initial state out of range");
    }
    d.accepting.assign(d.states, false);
    for (const auto& v : j.at("accepting")) {
      const int q = v.get<int>();
      if (q < 0 || q >= d.states) {
        throw InputError("accepting state out of range");
      }
      d.accepting[q] = true;
    }
    const auto& delta = j.at("delta");
    if (static_cast<int>(delta.size()) != d.states) {
      throw InputError("delta must list every state");
    }
    d.delta.resize(static_cast<std::size_t>(d.states) * d.alphabet.size());
    for (int q = 0; q < d.states; ++q) {
      for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
        const int target = delta.at(q).at(std::string(1, d.alphabet[a])).get<int>();
        if (target < 0 || target >= d.states) {
          throw InputError("transition target out of range");
        }
        d.delta[static_cast<std::size_t>(q) * d.alphabet.size() + a] = target;
      }
    }
    return d;
  } catch (const ordered_json::exception& e) {
    throw InputError(std::string("bad automaton document: ") + e.what());
  }
}

std::string morphism_to_json(const Morphism& m) {
  ordered_json letters = ordered_json::object();
  for (std::size_t i = 0; i < m.alphabet.size(); ++i) {
    letters[std::string(1, m.alphabet[i])] = m.letter_image[i];
  }
  return ordered_json{{"alphabet", alphabet_array(m.alphabet)},
                      {"monoid", monoid_obj(*m.codomain)},
                      {"letters", std::move(letters)}}
      .dump();
}

Morphism morphism_from_json(const std::string& text) {
  const ordered_json j = parse_document(text);
  try {
    Morphism m;
    m.alphabet = alphabet_from(j.at("alphabet"));
    m.codomain = monoid_from_obj(j.at("monoid"));
    m.letter_image.reserve(m.alphabet.size());
    for (char a : m.alphabet) {
      const int img = j.at("letters").at(std::string(1, a)).get<int>();
      if (img < 0 || img >= m.codomain->size()) {
        throw InputError("letter image out of range");
      }
      m.letter_image.push_back(img);
    }
    return m;
  } catch (const ordered_json::exception& e) {
    throw InputError(std::string("bad morphism document: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot read file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace tlc
