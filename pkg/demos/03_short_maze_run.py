"""
A short maze campaign and a replay
==================================

The robot has 16 rangefinders and 4 pie-slice goal sensors and is driven by
a 16-layer SELU network. Fitness is minus the path distance from its final
position to the goal. This runs a few thousand evaluations of control and
SM-G-ABS from the same initial population, then replays the best controller.
"""
import tempfile
from pathlib import Path

from safemut.domains.maze import load_map, maze_eval
from safemut.harness import parse_configs, run_campaign

out = Path(tempfile.mkdtemp())
raw = {"name": "maze-demo", "domain": "maze", "methods": {"CONTROL": 0.05, "SM-G-ABS": 0.005},
       "population_size": 50, "budget": 3000, "n_runs": 1, "master_seed": 3, "output": str(out)}

# %%
for cfg in parse_configs(raw):
    res = run_campaign(cfg)
    run = res.runs[0]
    print(f"{cfg.method:<9} best {run.best_fitness:8.2f}  solved={run.solved}  "
          f"at {run.evaluations_to_solution}")

# %%
# Replay the ABS champion on the bundled map. The same thing is available as
# `safemut replay <genome> <map>`.
world = load_map()
best = res.runs[0].best_genome
rec = maze_eval(world, best)
x, y, _ = rec.aux["final_pose"]
print(f"replay: fitness {rec.fitness:.2f} after {rec.aux['steps']} steps, ends at ({x:.1f}, {y:.1f})")
print("outputs written to", out)
