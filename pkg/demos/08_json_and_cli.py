"""
Documents and the command line
==============================

Every object round-trips through a canonical JSON document with exact
``"num/den"`` coefficients.  The ``prepro`` command reads and writes the
same documents.
"""

# %%
from prepro import CyclicGroupSpec, air_grading, mckay_presentation
from prepro.serialize import dumps, loads, make_document, presentation_from_dict, presentation_to_dict, to_dot

s = CyclicGroupSpec.parse("3:1,2")
p = mckay_presentation(s)
text = dumps(make_document("presentation", presentation=presentation_to_dict(p)))
print(text[:300], "...")
back, _ = presentation_from_dict(loads(text)["presentation"])
print("round trip equal:", back == p)

# %%
print(to_dot(p.quiver, air_grading(s)))

# %%
# The same through the CLI entry point (``prepro`` once installed).
from prepro.cli import main

main(["classify", "5:1,1,3", "3:1,2,1,2"])
