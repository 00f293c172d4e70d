/* C interface to the negation-resolution library.
 *
 * Every function returns a negare_status; NEGARE_OK is 0 and the other
 * values match the CLI exit codes. On failure negare_last_error() describes
 * the problem (per thread, valid until the next failing call on the same
 * thread). Strings returned through `char**` belong to the caller and are
 * released with negare_string_free(). A negare_pipeline is immutable after
 * negare_pipeline_open() and may be shared between threads.
 */
#ifndef NEGARE_NEGARE_H
#define NEGARE_NEGARE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(NEGARE_BUILDING_LIBRARY)
#    define NEGARE_API __declspec(dllexport)
#  else
#    define NEGARE_API __declspec(dllimport)
#  endif
#else
#  define NEGARE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum negare_status {
  NEGARE_OK = 0,
  NEGARE_E_USAGE = 1,     /* bad argument or option */
  NEGARE_E_IO = 2,        /* input file unreadable */
  NEGARE_E_LEXICON = 3,   /* lexicon directory missing or invalid */
  NEGARE_E_PARSE = 4,     /* malformed corpus / JSONL / score file */
  NEGARE_E_ALIGNMENT = 5, /* external score file length != corpus length */
  NEGARE_E_INTERNAL = 6
} negare_status;

typedef enum negare_mode {
  NEGARE_MODE_PLAIN = 0,
  NEGARE_MODE_INVERT_NEXT = 1,
  NEGARE_MODE_ANTONYMIZE = 2
} negare_mode;

/* Flags for negare_pipeline_open(). */
#define NEGARE_STRICT_FIRST_SYNONYM 0x1u

typedef struct negare_pipeline negare_pipeline;
typedef struct negare_corpus negare_corpus;

NEGARE_API const char* negare_version(void);
NEGARE_API const char* negare_status_name(negare_status status);
NEGARE_API const char* negare_last_error(void);
NEGARE_API void negare_string_free(char* str);

/* "plain", "invert_next" or "antonymize". */
NEGARE_API negare_status negare_mode_parse(const char* name, negare_mode* out);
NEGARE_API const char* negare_mode_name(negare_mode mode);

NEGARE_API negare_status negare_pipeline_open(const char* lexicon_dir, unsigned flags,
                                              negare_pipeline** out);
NEGARE_API void negare_pipeline_close(negare_pipeline* pipeline);
/* {"sources": [{"id", "rows"}...], "antonym_headwords", "synonym_headwords",
 *  "sentiment_entries", "cues": [...], "contractions", "tag_entries"} */
NEGARE_API negare_status negare_pipeline_summary_json(const negare_pipeline* pipeline,
                                                      char** out_json);

/* Uses the pipeline's contraction table, or the built-in one when
 * `pipeline` is NULL. */
NEGARE_API negare_status negare_decontract(const negare_pipeline* pipeline, const char* text,
                                           char** out);

/* One-line JSON records, as written by the detect / transform commands. */
NEGARE_API negare_status negare_detect_json(const negare_pipeline* pipeline, const char* id,
                                            const char* text, char** out_json);
NEGARE_API negare_status negare_transform_json(const negare_pipeline* pipeline, const char* id,
                                               const char* text, char** out_json);
/* Transformed text only. */
NEGARE_API negare_status negare_transform_text(const negare_pipeline* pipeline, const char* text,
                                               char** out);

NEGARE_API negare_status negare_score(const negare_pipeline* pipeline, const char* text,
                                      negare_mode mode, double* out_value, size_t* out_matched);

/* JSON array of antonym strings, as used for substitution. */
NEGARE_API negare_status negare_antonyms_json(const negare_pipeline* pipeline, const char* word,
                                              char** out_json);

/* Corpus files: JSONL ({"id", "text", "gold_label"}) or plain text. */
NEGARE_API negare_status negare_corpus_load(const char* path, negare_corpus** out);
NEGARE_API void negare_corpus_free(negare_corpus* corpus);
NEGARE_API size_t negare_corpus_size(const negare_corpus* corpus);
/* Borrowed; NULL when `index` is out of range. */
NEGARE_API const char* negare_corpus_id(const negare_corpus* corpus, size_t index);
NEGARE_API const char* negare_corpus_text(const negare_corpus* corpus, size_t index);

/* Ascending indices of a seeded sample of round(fraction * n) items (at
 * least 2, at most n). `out` must hold n entries. */
NEGARE_API negare_status negare_sample_indices(size_t n, double fraction, uint64_t seed,
                                               size_t* out, size_t* out_count);

typedef struct negare_eval_options {
  const negare_mode* modes;
  size_t mode_count;
  const char* const* external_files; /* line-aligned score files, may be NULL */
  size_t external_count;
  double sample_fraction; /* <= 0 disables sampling */
  uint64_t seed;
  unsigned jobs; /* 0 or 1: single-threaded */
} negare_eval_options;

/* Correlation matrix CSV and per-sentence pairs CSV. */
NEGARE_API negare_status negare_eval(const negare_pipeline* pipeline, const negare_corpus* corpus,
                                     const negare_eval_options* options, char** out_matrix_csv,
                                     char** out_pairs_csv);

/* Report as one violation per line ("file:line: message"); empty when the
 * fixture tree is consistent. */
NEGARE_API negare_status negare_validate_fixtures(const char* fixtures_dir, char** out_report,
                                                  size_t* out_violations);

#ifdef __cplusplus
}
#endif

#endif /* NEGARE_NEGARE_H */
