"""The full pipeline: deep point -> hypergraph -> dense subsets ->
trimming -> independent verification, with an SVG of the certificate.

The output is a point O and subsets Q_i of each color class such that
every rainbow triangle on the Q_i strictly contains O.  Verification is
a fresh brute-force pass over all |Q_1|*|Q_2|*|Q_3| triangles.
"""

import pathlib
import time

from rainbowdepth import (
    GeneratorSpec,
    PipelineParams,
    all_or_none_check,
    generate,
    render_svg,
    report_bytes,
    run_pipeline,
    verify_certificate,
)

cfg = generate(GeneratorSpec(seed=12, n=10, d=2))
t0 = time.time()
bundle = run_pipeline(cfg, PipelineParams(seed=12))
print(f"pipeline time: {time.time() - t0:.1f}s")
print(f"depth at O: {bundle.depth_at_o} of {cfg.n ** 3} rainbow triangles")
print(f"subset sizes: {bundle.sizes}  ratios |Q_i|/n: {bundle.ratios}")
print(f"trim steps: {bundle.trace.step_count}, verified: {bundle.verified}")

assert verify_certificate(cfg, bundle.o_point, bundle.q_sets) is None
print("independent oracle agrees: every rainbow triangle on the Q_i contains O")

print("containment dichotomy on the separated family:",
      all_or_none_check(bundle.q_sets, bundle.o_point))

out = pathlib.Path("pipeline_demo")
out.mkdir(exist_ok=True)
(out / "report.json").write_bytes(report_bytes(bundle))
(out / "certificate.svg").write_text(render_svg(cfg, bundle))
print(f"\nreport and SVG written to {out}/")
