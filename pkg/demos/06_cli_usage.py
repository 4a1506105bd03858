"""Command line
==============

The same computations are available as ``unruh-discord sweep`` and
``unruh-discord transition``. Here they are driven through ``main`` so the
script runs anywhere the package is installed.
"""

import os
import tempfile

from unruh_discord.cli import main

# %%
print("$ unruh-discord transition --temperature '1/(2 ln cot(pi/8))'")
main(["transition", "--temperature", "1/(2 ln cot(pi/8))"])

# %%
print("\n$ unruh-discord sweep --channel bit --c1 0.6 --c2 -0.6 --c3 1 --grid 0:0.4:5")
main(["sweep", "--channel", "bit", "--c1", "0.6", "--c2", "-0.6", "--c3", "1", "--grid", "0:0.4:5"])

# %%
# A config file plus a flag override.
with tempfile.TemporaryDirectory() as tmp:
    cfg = os.path.join(tmp, "run.ini")
    with open(cfg, "w") as fh:
        fh.write("[state]\nc1 = 1\nc2 = -0.6\nc3 = 0.6\n\n[unruh]\ntemperature = inf\n\n"
                 "[grid]\ngrid = 0:1:3\n")
    print("\n$ unruh-discord sweep --config run.ini --format json")
    main(["sweep", "--config", cfg, "--format", "json"])

# %%
# Invalid input is reported, one line per problem, with exit code 2.
print("\n$ unruh-discord sweep --c1 1 --c2 1 --c3 1 --grid 0:1:3")
print("exit code", main(["sweep", "--c1", "1", "--c2", "1", "--c3", "1", "--grid", "0:1:3"]))
