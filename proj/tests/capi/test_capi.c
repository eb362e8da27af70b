/* Exercises the shared library through its C header only. */
#include <funobs/funobs.h>

#include <math.h>
#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

static const char* example2 =
    "{\"name\": \"example2\", \"A\": [[0, 0], [1, 0]], \"B\": [[1], [0]], \"C\": [[1, 1]], \"D\": [[0]],"
    " \"E\": [[0, 0]], \"F\": [[1]]}";

static void test_check(void) {
  funobs_system* sys = NULL;
  funobs_report* rep = NULL;
  size_t n = 0, m = 0, p = 0, q = 0, i;
  const char* name = NULL;
  int holds = -1, strong = -1, star = -1;
  char* text = NULL;
  char* json = NULL;

  EXPECT(funobs_system_parse(example2, &sys) == FUNOBS_OK);
  if (!sys) return;
  funobs_system_dims(sys, &n, &m, &p, &q);
  EXPECT(n == 2 && m == 1 && p == 1 && q == 1);
  EXPECT(strcmp(funobs_system_name(sys), "example2") == 0);
  EXPECT(funobs_system_expected(sys, "strongly_functional_detectable") == -1);

  EXPECT(funobs_check(sys, FUNOBS_ALL, &rep) == FUNOBS_OK);
  EXPECT(funobs_report_verdict_count(rep) == 3);
  for (i = 0; i < funobs_report_verdict_count(rep); ++i) {
    EXPECT(funobs_report_verdict(rep, i, &name, &holds));
    if (strcmp(name, "strongly_functional_detectable") == 0) strong = holds;
    if (strcmp(name, "strong_star_functional_detectable") == 0) star = holds;
  }
  EXPECT(strong == 1);
  EXPECT(star == 0);
  EXPECT(funobs_report_all_hold(rep) == 0);
  EXPECT(!funobs_report_verdict(rep, 99, &name, &holds));

  EXPECT(funobs_report_text(rep, &text) == FUNOBS_OK);
  EXPECT(text && strstr(text, "strong-star: no") != NULL);
  EXPECT(funobs_report_json(rep, &json) == FUNOBS_OK);
  EXPECT(json && strstr(json, "funobs-report/1") != NULL);
  funobs_string_free(text);
  funobs_string_free(json);
  funobs_report_free(rep);

  EXPECT(funobs_system_serialize(sys, &json) == FUNOBS_OK);
  funobs_system_free(sys);
  sys = NULL;
  EXPECT(funobs_system_parse(json, &sys) == FUNOBS_OK);
  funobs_string_free(json);
  funobs_system_free(sys);
}

static void test_errors(void) {
  funobs_system* sys = NULL;
  EXPECT(funobs_system_parse("{\"A\": [[1, 2]]}", &sys) == FUNOBS_ERR_DIMENSION);
  EXPECT(sys == NULL);
  EXPECT(strlen(funobs_last_error()) > 0);
  EXPECT(funobs_system_parse("{\"A\": ", &sys) == FUNOBS_ERR_PARSE);
  EXPECT(funobs_system_parse(NULL, &sys) == FUNOBS_ERR_INVALID_ARGUMENT);
  EXPECT(funobs_system_load("/nonexistent/system.json", &sys) != FUNOBS_OK);
  EXPECT(strcmp(funobs_status_string(FUNOBS_ERR_UNSTABLE), "unstable") == 0);
  EXPECT(strcmp(funobs_version(), "1.0.0") == 0);
  funobs_system_free(NULL);
  funobs_report_free(NULL);
  funobs_trajectory_free(NULL);
}

static void test_witness_and_simulate(void) {
  funobs_system* sys = NULL;
  funobs_report* rep = NULL;
  funobs_trajectory* traj = NULL;
  char* text = NULL;
  char* csv = NULL;
  int decayed = -1;
  double final_sup = -1, threshold = 0, horizon = 0;
  size_t samples = 0;

  EXPECT(funobs_system_parse("{\"A\": [[-1, 0], [0, -1]], \"C\": [[1, 0], [0, 1]], \"E\": [[1, 0]]}", &sys) ==
         FUNOBS_OK);
  if (!sys) return;
  EXPECT(funobs_witness(sys, &rep) == FUNOBS_OK);
  EXPECT(funobs_report_all_hold(rep) == 1);
  EXPECT(funobs_report_text(rep, &text) == FUNOBS_OK);
  EXPECT(text && strstr(text, "constant solution") != NULL);
  funobs_string_free(text);
  funobs_report_free(rep);

  EXPECT(funobs_simulate(sys, "{\"G\": [], \"H\": [], \"Q\": [[]], \"R\": [[1, 0]]}",
                         "{\"x0\": [1, -2], \"horizon\": 10, \"step\": 0.01}", &traj) == FUNOBS_OK);
  funobs_trajectory_summary(traj, &decayed, &final_sup, &threshold, &horizon, &samples);
  EXPECT(decayed == 1);
  EXPECT(final_sup == 0.0);
  EXPECT(fabs(horizon - 10.0) < 1e-12);
  EXPECT(samples == 1001);
  EXPECT(funobs_trajectory_csv(traj, 100, &csv) == FUNOBS_OK);
  EXPECT(csv && strncmp(csv, "t,x_1,x_2,z_1,zhat_1,e_1\n", 25) == 0);
  funobs_string_free(csv);
  funobs_trajectory_free(traj);

  traj = NULL;
  EXPECT(funobs_simulate(sys, "{\"N\": \"1/(s - 1)\"}", NULL, &traj) == FUNOBS_ERR_UNSTABLE);
  EXPECT(funobs_simulate(sys, "{\"N\": [[\"s\", 0]]}", NULL, &traj) == FUNOBS_ERR_NOT_PROPER);
  EXPECT(traj == NULL);
  funobs_system_free(sys);
}

int main(void) {
  test_check();
  test_errors();
  test_witness_and_simulate();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("capi: all checks passed\n");
  return 0;
}
