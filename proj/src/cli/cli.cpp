// Copyright 2026 The Stampsy Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "stampsy/cli/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stampsy/common/error.hpp"
#include "stampsy/common/text.hpp"
#include "stampsy/corpus/convert.hpp"
#include "stampsy/corpus/corpus_io.hpp"
#include "stampsy/corpus/stats.hpp"
#include "stampsy/engine/config.hpp"
#include "stampsy/engine/engine.hpp"
#include "stampsy/engine/events.hpp"
#include "stampsy/eval/ghsc.hpp"
#include "stampsy/eval/metrics.hpp"
#include "stampsy/eval/quads.hpp"
#include "stampsy/eval/rubric.hpp"
#include "stampsy/kstore/quadruple.hpp"
#include "stampsy/kstore/store.hpp"
#include "stampsy/service/server.hpp"
#include "stampsy/stsp/rules.hpp"
#include "stampsy/stsp/stamp.hpp"

namespace stampsy::cli {

namespace {

using nlohmann::json;

struct Globals {
  std::string config_path;
  bool json_output = false;
  bool quiet = false;
  std::optional<std::uint64_t> seed;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

engine::StampsyConfig load(const Globals& g) {
  engine::StampsyConfig config;
  if (!g.config_path.empty()) config = engine::load_config(g.config_path);
  if (g.seed) config.session.seed = *g.seed;
  return config;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::not_found, "cannot open " + path);
  return in;
}

corpus::HelpingSkill skill_arg(const std::string& name) {
  auto skill = corpus::parse_skill(name);
  if (!skill) throw Error(ErrorCode::invalid_argument, "unknown skill '" + name + "'");
  return *skill;
}

// "time_of_day=morning", "location=home", or a bare value such as "rainy".
stsp::SpatioTemporalState state_arg(const std::vector<std::string>& items) {
  stsp::SpatioTemporalState state;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    std::optional<stsp::StampKey> key;
    if (eq == std::string::npos) {
      key = stsp::parse_stamp_value(item);
    } else if (auto field = stsp::field_from_string(item.substr(0, eq))) {
      if (auto v = stsp::parse_field_value(*field, item.substr(eq + 1))) key = stsp::StampKey{*field, *v};
    }
    if (!key) throw Error(ErrorCode::invalid_argument, "cannot read state value '" + item + "'");
    state.set(*key);
  }
  return state;
}

void print_state(std::ostream& out, const stsp::SpatioTemporalState& state) {
  for (stsp::Field f : stsp::kFields) {
    const auto key = state.key(f);
    out << stsp::to_string(f) << ": " << (key ? std::string(key->name()) : std::string("-")) << '\n';
  }
}

void print_turn(std::ostream& out, const engine::TurnResult& r, bool quiet) {
  if (!quiet) {
    const auto skill = r.goal.skill().value_or(corpus::HelpingSkill::others);
    out << "[skill] " << corpus::to_string(skill) << " p="
        << fixed(r.prediction.probability(r.prediction.predicted), 3);
    if (r.prediction.degraded) out << " (fallback)";
    out << '\n';
    out << "[stamp] " << (r.stamp.empty() ? std::string("-") : r.stamp.text) << '\n';
    if (!r.retrieval.gated) {
      out << "[knowledge] not needed for this skill\n";
    } else {
      out << "[knowledge] " << r.retrieval.quadruples.size() << " retrieved\n";
      for (const auto& q : r.retrieval.quadruples) out << "  " << kstore::render(q.quad) << '\n';
    }
    for (const auto& q : r.retrieval.pinned) out << "  pinned " << kstore::render(q) << '\n';
  }
  out << "Counselor: " << r.response.text << '\n';
  if (r.recording_error && !quiet) out << "[recording] failed: " << *r.recording_error << '\n';
  if (r.signal != engine::ProcessSignal::continue_session && !quiet) {
    out << "[signal] " << engine::to_string(r.signal);
    if (r.end_reason) out << " (" << *r.end_reason << ')';
    out << '\n';
  }
}

int cmd_chat(const Globals& g, const Io& io, const std::string& session_id,
             const std::string& log_path) {
  auto config = load(g);
  auto backends = engine::build_backends(config, g.seed);
  engine::Engine eng(config, backends);
  auto conversation = eng.open_session(session_id.empty() ? std::nullopt
                                                          : std::optional<std::string>(session_id));
  const auto& opening = conversation.session.utterances().front();
  if (g.json_output) {
    io.out << json{{"session_id", conversation.session.id()}, {"opening", opening.text}}.dump()
           << '\n';
  } else {
    if (!g.quiet) io.out << "[session] " << conversation.session.id() << '\n';
    io.out << "Counselor: " << opening.text << '\n';
  }
  std::string line;
  bool ended = false;
  while (!ended && std::getline(io.in, line)) {
    const auto text = text::trim(line);
    if (text.empty()) continue;
    if (text == "/quit" || text == "/close") break;
    try {
      const auto r = eng.step(conversation, text);
      if (g.json_output) {
        io.out << engine::to_json(r).dump() << '\n';
      } else {
        print_turn(io.out, r, g.quiet);
      }
      ended = r.signal == engine::ProcessSignal::end;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::lifecycle) throw;
      io.err << "turn failed (" << to_string(e.code()) << "): " << e.what() << '\n';
    }
  }
  if (!conversation.log.closed()) {
    const auto closing = eng.close_session(conversation);
    if (g.json_output) {
      io.out << json{{"closing", closing.text}}.dump() << '\n';
    } else {
      io.out << "Counselor: " << closing.text << '\n';
    }
  }
  if (!log_path.empty()) {
    std::ofstream log(log_path, std::ios::trunc);
    if (!log) throw Error(ErrorCode::not_found, "cannot write " + log_path);
    conversation.log.write(log);
  }
  return kExitOk;
}

int cmd_serve(const Globals& g, const Io& io, std::string host, int port,
              const std::string& storage, const std::string& corpus_path) {
  auto config = load(g);
  if (host.empty()) host = config.service.bind;
  if (port < 0) port = config.service.port;
  const std::string dir = storage.empty() ? config.service.storage_dir : storage;
  std::shared_ptr<engine::EventStore> store;
  if (dir.empty()) {
    store = std::make_shared<engine::MemoryEventStore>();
  } else {
    store = std::make_shared<engine::FileEventStore>(dir);
  }
  service::ServerOptions options;
  options.cors_origin = config.service.cors_origin;
  if (!config.service.api_token_env.empty()) {
    const char* token = std::getenv(config.service.api_token_env.c_str());
    if (token == nullptr || *token == '\0') {
      throw Error(ErrorCode::config, "environment variable " + config.service.api_token_env +
                                         " is not set");
    }
    options.api_token = token;
  }
  if (!corpus_path.empty()) options.corpus_path = corpus_path;
  auto eng = std::make_shared<engine::Engine>(config, engine::build_backends(config, g.seed));
  service::Server server(eng, store, options);
  io.err << "listening on " << host << ':' << port << '\n';
  server.run(host, port);
  return kExitOk;
}

int cmd_stats(const Globals& g, const Io& io, const std::string& path, const std::string& tokens,
              bool strict) {
  const auto loaded = corpus::load_corpus(path);
  for (const auto& e : loaded.errors) {
    io.err << path << ':' << e.line << ": " << (e.field.empty() ? "" : e.field + ": ") << e.message
           << '\n';
  }
  if (!g.quiet) {
    for (const auto& w : loaded.warnings) {
      io.err << path << ':' << w.line << ": warning: " << w.field << ": " << w.message << '\n';
    }
  }
  const auto report = corpus::corpus_stats(loaded.sessions, text::token_mode_from_string(tokens));
  if (g.json_output) {
    auto j = corpus::to_json(report);
    j["rejected_records"] = loaded.errors.size();
    io.out << j.dump(2) << '\n';
  } else {
    io.out << corpus::render_table(report);
  }
  return strict && !loaded.ok() ? kExitFailure : kExitOk;
}

int cmd_kb_ingest(const Globals& g, const Io& io, const std::string& input,
                  const std::string& store_path) {
  kstore::KnowledgeStore store;
  if (std::filesystem::exists(store_path)) {
    const auto existing = kstore::load_quads(store_path);
    store.ingest(existing);
  }
  const auto incoming = kstore::load_quads(input);
  const auto added = store.ingest(incoming);
  std::ofstream out(store_path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::not_found, "cannot write " + store_path);
  for (const auto& q : store.quads()) out << kstore::to_json(q).dump() << '\n';
  if (g.json_output) {
    io.out << json{{"read", incoming.size()}, {"added", added}, {"total", store.size()}}.dump()
           << '\n';
  } else {
    io.out << "read " << incoming.size() << ", added " << added << ", total " << store.size()
           << '\n';
  }
  return kExitOk;
}

int cmd_kb_query(const Globals& g, const Io& io, std::string store_path, const std::string& query,
                 const std::string& skill, const std::vector<std::string>& state, std::size_t k) {
  const auto config = load(g);
  if (store_path.empty() && config.retrieval.quads_path) store_path = *config.retrieval.quads_path;
  if (store_path.empty()) throw Error(ErrorCode::invalid_argument, "no knowledge store given");
  kstore::KnowledgeStore store;
  store.ingest(kstore::load_quads(store_path));
  kstore::RetrievalOptions options;
  options.k = k == 0 ? config.retrieval.k : k;
  const auto result =
      kstore::retrieve(store, {query, state_arg(state)}, skill_arg(skill), options);
  if (g.json_output) {
    io.out << kstore::to_json(result).dump(2) << '\n';
    return kExitOk;
  }
  if (!result.gated) {
    io.out << "retrieval skipped for " << skill << '\n';
    return kExitOk;
  }
  for (const auto& q : result.quadruples) {
    io.out << fixed(q.score, 4) << "  " << kstore::render(q.quad) << '\n';
  }
  if (result.quadruples.empty()) io.out << "no matches\n";
  return kExitOk;
}

int cmd_stsp_extract(const Globals& g, const Io& io, std::vector<std::string> utterances,
                     bool each) {
  const auto config = load(g);
  std::optional<stsp::RuleTable> custom;
  if (config.templates.stsp_rules_path) custom = stsp::RuleTable::load(*config.templates.stsp_rules_path);
  const auto& rules = custom ? *custom : stsp::RuleTable::builtin();
  if (utterances.empty()) {
    std::string line;
    while (std::getline(io.in, line)) {
      if (!text::trim(line).empty()) utterances.push_back(line);
    }
  }
  if (utterances.empty()) throw Error(ErrorCode::invalid_argument, "no utterances given");
  auto emit = [&](const stsp::SpatioTemporalState& state) {
    const auto stamp = stsp::make_stamp(state);
    if (g.json_output) {
      io.out << json{{"state", stsp::to_json(state)}, {"stamp", stamp.text}}.dump() << '\n';
    } else {
      print_state(io.out, state);
      io.out << "stamp: " << (stamp.empty() ? std::string("-") : stamp.text) << '\n';
    }
  };
  if (each) {
    std::optional<stsp::SpatioTemporalState> state;
    for (std::size_t i = 0; i < utterances.size(); ++i) {
      state = stsp::extract_state(std::span(utterances).subspan(i, 1), state, rules);
      if (!g.json_output) io.out << "# " << utterances[i] << '\n';
      emit(*state);
    }
  } else {
    emit(stsp::extract_state(utterances, std::nullopt, rules));
  }
  return kExitOk;
}

int cmd_eval_ghsc(const Globals& g, const Io& io, const std::string& predictions_path,
                  const std::string& transcript_path, bool use_context) {
  std::optional<eval::GhscTranscript> custom;
  if (!transcript_path.empty()) custom = eval::GhscTranscript::load(transcript_path);
  const auto& transcript = custom ? *custom : eval::GhscTranscript::builtin();
  std::vector<corpus::HelpingSkill> predictions;
  if (!predictions_path.empty()) {
    auto in = open_input(predictions_path);
    predictions = eval::read_predictions(in);
  } else {
    const auto config = load(g);
    auto backends = engine::build_backends(config, g.seed);
    predictions = eval::predict_ghsc(transcript, *backends.classifier, use_context);
  }
  const auto score = eval::score_ghsc(transcript, predictions);
  const double baseline = eval::constant_baseline(transcript, corpus::HelpingSkill::others);
  if (g.json_output) {
    auto j = eval::to_json(score);
    j["others_baseline"] = baseline;
    io.out << j.dump(2) << '\n';
    return kExitOk;
  }
  io.out << "units " << score.total << '\n'
         << "correct " << score.correct << '\n'
         << "accuracy " << fixed(score.accuracy, 3) << '\n'
         << "others baseline " << fixed(baseline, 3) << '\n';
  if (!g.quiet) io.out << '\n' << skills::render_table(score.report);
  return kExitOk;
}

int cmd_eval_gen(const Globals& g, const Io& io, const std::string& pairs_path, bool sentence,
                 bool embed, const std::string& tokens) {
  auto in = open_input(pairs_path);
  const auto pairs = eval::read_pairs(in);
  std::shared_ptr<backends::Embedder> embedder;
  if (embed) {
    const auto config = load(g);
    embedder = engine::build_backends(config, g.seed).embedder;
    if (!embedder) throw Error(ErrorCode::config, "no embedding backend configured");
  }
  const auto s = eval::evaluate_generation(pairs, embedder.get(), !sentence,
                                           text::token_mode_from_string(tokens));
  if (g.json_output) {
    io.out << eval::to_json(s).dump(2) << '\n';
    return kExitOk;
  }
  io.out << "pairs " << s.pairs << '\n'
         << "BLEU-1 " << fixed(s.bleu1 * 100, 2) << '\n'
         << "BLEU-2 " << fixed(s.bleu2 * 100, 2) << '\n'
         << "ROUGE-L " << fixed(s.rouge_l * 100, 2) << '\n';
  if (s.embed_sim) io.out << "EmbSim " << fixed(*s.embed_sim * 100, 2) << '\n';
  return kExitOk;
}

int cmd_eval_quads(const Globals& g, const Io& io, const std::string& gold_path,
                   const std::string& pred_path) {
  const auto s = eval::slot_value_scores(kstore::load_quads(gold_path), kstore::load_quads(pred_path));
  if (g.json_output) {
    io.out << eval::to_json(s).dump(2) << '\n';
    return kExitOk;
  }
  io.out << "pairs " << s.pairs << '\n'
         << "slot accuracy " << fixed(s.slot_accuracy, 4) << '\n'
         << "value ROUGE-L " << fixed(s.value_rouge_l, 4) << '\n'
         << "stamp accuracy " << (s.stamp_accuracy ? fixed(*s.stamp_accuracy, 4) : "-") << '\n';
  return kExitOk;
}

int cmd_eval_rubric(const Globals& g, const Io& io, const std::string& path) {
  auto in = open_input(path);
  const auto scores = eval::read_rubric(in);
  const auto s = eval::aggregate_rubric(scores);
  if (g.json_output) {
    io.out << eval::to_json(s).dump(2) << '\n';
    return kExitOk;
  }
  io.out << "scores " << s.scores << ", items " << s.items << ", raters " << s.raters << '\n';
  for (auto d : eval::kAllRubricDimensions) {
    io.out << eval::to_string(d) << ' ' << fixed(s.means[static_cast<std::size_t>(d)], 3) << '\n';
  }
  for (const auto& k : s.agreement) {
    io.out << "kappa " << k.rater_a << '/' << k.rater_b << ' ' << eval::to_string(k.dimension)
           << ' ' << fixed(k.kappa, 3) << " (n=" << k.items << ")\n";
  }
  return kExitOk;
}

int cmd_convert(const Globals& g, const Io& io, const std::string& input,
                const std::string& output) {
  auto in = open_input(input);
  const auto result = corpus::convert_export(in);
  for (const auto& e : result.errors) {
    io.err << input << ": record " << e.line << ": " << e.field << ": " << e.message << '\n';
  }
  if (!g.quiet) {
    for (const auto& w : result.warnings) {
      io.err << input << ": record " << w.line << ": warning: " << w.field << ": " << w.message
             << '\n';
    }
  }
  std::ofstream file;
  if (!output.empty()) {
    file.open(output, std::ios::trunc);
    if (!file) throw Error(ErrorCode::not_found, "cannot write " + output);
  }
  std::ostream& out = output.empty() ? io.out : file;
  for (const auto& r : result.records) out << r.dump() << '\n';
  if (!output.empty()) {
    io.err << "converted " << result.records.size() << ", rejected " << result.errors.size()
           << '\n';
  }
  return result.errors.empty() ? kExitOk : kExitFailure;
}

int cmd_export(const Globals&, const Io& io, const std::string& log_path) {
  auto in = open_input(log_path);
  const auto log = engine::EventLog::read(in);
  for (const auto& record : engine::export_finetune(log)) io.out << record.dump() << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Skill-guided counseling dialogue toolkit", "stampsy"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  std::uint64_t seed = 0;
  app.add_option("--config", g.config_path, "TOML configuration file");
  app.add_flag("--json", g.json_output, "Machine-readable output");
  app.add_flag("--quiet", g.quiet, "Less output");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for mock backends and session ids");

  std::function<int()> action;
  const Io io{in, out, err};

  auto* chat = app.add_subcommand("chat", "Interactive session on stdin");
  std::string session_id, log_path;
  chat->add_option("--session-id", session_id, "Session id");
  chat->add_option("--log", log_path, "Write the event log here on exit");
  chat->callback([&] { action = [&] { return cmd_chat(g, io, session_id, log_path); }; });

  auto* serve = app.add_subcommand("serve", "Start the HTTP service");
  std::string host, storage, corpus_path;
  int port = -1;
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--port", port, "Port");
  serve->add_option("--storage", storage, "Event log directory");
  serve->add_option("--corpus", corpus_path, "Corpus for GET /corpus/stats");
  serve->callback(
      [&] { action = [&] { return cmd_serve(g, io, host, port, storage, corpus_path); }; });

  auto* stats = app.add_subcommand("stats", "Corpus statistics");
  std::string stats_path, tokens = "mixed";
  bool strict = false;
  stats->add_option("corpus", stats_path, "Corpus JSONL")->required();
  stats->add_option("--tokens", tokens, "Token mode")
      ->check(CLI::IsMember({"mixed", "characters", "whitespace"}));
  stats->add_flag("--strict", strict, "Fail when any record is rejected");
  stats->callback([&] { action = [&] { return cmd_stats(g, io, stats_path, tokens, strict); }; });

  auto* kb = app.add_subcommand("kb", "Knowledge store");
  kb->require_subcommand(1);
  auto* ingest = kb->add_subcommand("ingest", "Merge quadruples into a store file");
  std::string ingest_input, store_path;
  ingest->add_option("input", ingest_input, "Quadruple JSONL")->required();
  ingest->add_option("--store", store_path, "Store file")->required();
  ingest->callback([&] { action = [&] { return cmd_kb_ingest(g, io, ingest_input, store_path); }; });
  auto* query = kb->add_subcommand("query", "Retrieve quadruples");
  std::string query_text, skill = "information_giving";
  std::vector<std::string> state;
  std::size_t k = 0;
  query->add_option("--store", store_path, "Store file");
  query->add_option("--text", query_text, "Query text")->required();
  query->add_option("--skill", skill, "Predicted skill");
  query->add_option("--state", state, "State values, e.g. time_of_day=morning");
  query->add_option("--k", k, "Result count");
  query->callback([&] {
    action = [&] { return cmd_kb_query(g, io, store_path, query_text, skill, state, k); };
  });

  auto* stsp_cmd = app.add_subcommand("stsp", "Spatiotemporal states");
  stsp_cmd->require_subcommand(1);
  auto* extract = stsp_cmd->add_subcommand("extract", "State and stamp from utterances");
  std::vector<std::string> utterances;
  bool each = false;
  extract->add_option("utterances", utterances, "Utterances, oldest first; stdin lines if none");
  extract->add_flag("--each", each, "Print the state after every utterance");
  extract->callback([&] { action = [&] { return cmd_stsp_extract(g, io, utterances, each); }; });

  auto* ev = app.add_subcommand("eval", "Evaluation harness");
  ev->require_subcommand(1);
  auto* ghsc = ev->add_subcommand("ghsc", "Score skill labels on the practice transcript");
  std::string predictions, transcript;
  bool use_context = false;
  ghsc->add_option("--predictions", predictions, "JSON list of skills, one per unit");
  ghsc->add_option("--transcript", transcript, "Transcript JSON instead of the bundled one");
  ghsc->add_flag("--use-context", use_context, "Classify with the preceding transcript");
  ghsc->callback([&] {
    action = [&] { return cmd_eval_ghsc(g, io, predictions, transcript, use_context); };
  });
  auto* gen = ev->add_subcommand("gen", "BLEU, ROUGE-L and embedding similarity");
  std::string pairs;
  bool sentence = false, embed = false;
  std::string gen_tokens = "characters";
  gen->add_option("--pairs", pairs, "JSONL of candidate/reference pairs")->required();
  gen->add_flag("--sentence", sentence, "Average sentence BLEU instead of corpus BLEU");
  gen->add_flag("--embed", embed, "Add embedding similarity");
  gen->add_option("--tokens", gen_tokens, "Token mode")
      ->check(CLI::IsMember({"mixed", "characters", "whitespace"}));
  gen->callback([&] {
    action = [&] { return cmd_eval_gen(g, io, pairs, sentence, embed, gen_tokens); };
  });
  auto* quads = ev->add_subcommand("quads", "Slot and value scores of extracted quadruples");
  std::string gold_path, pred_path;
  quads->add_option("--gold", gold_path, "Gold quadruples")->required();
  quads->add_option("--pred", pred_path, "Predicted quadruples")->required();
  quads->callback([&] { action = [&] { return cmd_eval_quads(g, io, gold_path, pred_path); }; });
  auto* rubric = ev->add_subcommand("rubric", "Aggregate human ratings");
  std::string rubric_path;
  rubric->add_option("scores", rubric_path, "Rubric JSONL")->required();
  rubric->callback([&] { action = [&] { return cmd_eval_rubric(g, io, rubric_path); }; });

  auto* convert = app.add_subcommand("convert", "Annotation export to corpus records");
  std::string convert_in, convert_out;
  convert->add_option("input", convert_in, "Export file")->required();
  convert->add_option("-o,--output", convert_out, "Output JSONL");
  convert->callback([&] { action = [&] { return cmd_convert(g, io, convert_in, convert_out); }; });

  auto* exp = app.add_subcommand("export", "Fine-tuning records from a session event log");
  std::string export_log;
  exp->add_option("log", export_log, "Event log JSONL")->required();
  exp->callback([&] { action = [&] { return cmd_export(g, io, export_log); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kExitOk;
    err << '\n' << app.help();
    return kExitUsage;
  }
  if (seed_opt->count() > 0) g.seed = seed;
  try {
    return action();
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return e.code() == ErrorCode::invalid_argument ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace stampsy::cli
