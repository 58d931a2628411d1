# # Driving the command line from Python
#
# ``run`` takes the same arguments as the ``asian-pricer`` executable and
# returns its exit code.

# %%
import io

from asian_pricer.cli import run

run(["price", "--kind", "power-asian", "--power", "2", "--k", "10000"])

# ## Sweeps write CSV

# %%
buf = io.StringIO()
run(["sweep", "--of", "bound", "--axis", "k=90,100,110", "--axis", "alpha=0.8,0.9"], stdout=buf)
print(buf.getvalue())

# ## JSON output can be fed back as a config file

# %%
buf = io.StringIO()
run(["mc", "--paths", "20000", "--seed", "7", "--output", "json"], stdout=buf)
print(buf.getvalue())

# ## Self-check report

# %%
run(["verify", "--paths", "50000", "--seed", "42"])
