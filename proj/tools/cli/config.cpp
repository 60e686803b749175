#include "cli/config.hpp"

namespace rll::cli {

nlohmann::json to_json(const RunConfig& c) {
  nlohmann::json j{
      {"schema", kSchemaVersion},
      {"subcommand", c.subcommand},
      {"m", c.m},
      {"m_spec", c.m_spec},
      {"p", c.p},
      {"p_spec", c.p_spec},
      {"n", c.n},
      {"depth", c.depth},
      {"kmax", c.kmax},
      {"k", c.k},
      {"stream", c.stream},
      {"mode", c.mode},
      {"tol", c.tol},
      {"format", c.format},
      {"out", c.out},
      {"word", c.word},
      {"periodic", c.periodic},
      {"variant", c.variant},
      {"stride", c.stride},
      {"tail", c.tail},
      {"quick", c.quick},
      {"count_only", c.count_only},
      {"occurrences", c.occurrences},
      {"series", c.series},
      {"threads", c.threads},
  };
  j["seed"] = c.seed ? nlohmann::json(*c.seed) : nlohmann::json(nullptr);
  return j;
}

RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig c;
  c.subcommand = j.at("subcommand").get<std::string>();
  c.m = j.at("m").get<int>();
  c.m_spec = j.at("m_spec").get<std::string>();
  c.p = j.at("p").get<std::string>();
  c.p_spec = j.at("p_spec").get<std::string>();
  c.n = j.at("n").get<std::uint64_t>();
  c.depth = j.at("depth").get<std::uint64_t>();
  c.kmax = j.at("kmax").get<std::uint64_t>();
  c.k = j.at("k").get<std::uint64_t>();
  if (!j.at("seed").is_null()) c.seed = j.at("seed").get<std::uint64_t>();
  c.stream = j.at("stream").get<std::uint64_t>();
  c.mode = j.at("mode").get<std::string>();
  c.tol = j.at("tol").get<double>();
  c.format = j.at("format").get<std::string>();
  c.out = j.at("out").get<std::string>();
  c.word = j.at("word").get<std::string>();
  c.periodic = j.at("periodic").get<std::string>();
  c.variant = j.at("variant").get<std::string>();
  c.stride = j.at("stride").get<std::uint64_t>();
  c.tail = j.at("tail").get<std::uint64_t>();
  c.quick = j.at("quick").get<bool>();
  c.count_only = j.at("count_only").get<bool>();
  c.occurrences = j.at("occurrences").get<bool>();
  c.series = j.at("series").get<bool>();
  c.threads = j.at("threads").get<unsigned>();
  return c;
}

}  // namespace rll::cli
