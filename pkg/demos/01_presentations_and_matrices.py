"""Walk through a reflection presentation and its exact matrix model.

Builds the rank-3 type-C presentation, prints its diagram and relators,
then checks every relator (including the x-relation and the extra order
relation) against the affine matrix generators over the formal-alpha
ring.  Everything is exact integer arithmetic; no floats anywhere.
"""

from crysref.affine import build_generator_matrices, evaluate_word, verify_presentation
from crysref.presentations import build_group_presentation, diagram_to_dot

pres = build_group_presentation("C_alpha", 3)
print("generators:", ", ".join(pres.generator_names))
print("orders:   ", pres.generator_orders)
print()
print("relators:")
for i, rel in enumerate(pres.relators):
    tag = "  <- x-relation" if i == pres.x_relator_index else ""
    print(f"  {rel.text(pres.generator_names)}{tag}")
base, e = pres.extra_order_relation
print(f"extra order relation: ({base.text(pres.generator_names)})^{e}")
print()

spec, gens = build_generator_matrices("C_alpha", 3)
print(f"matrix model over {spec!r}, dimension {gens[0].dim}")
print("first generator:")
print(gens[0])
print()

report = verify_presentation(pres, gens)
print("all relators hold exactly:", report["pass"])
print("extra order relation holds:", report["extra_order"]["pass"])
print()

w = base ** e
print(f"evaluating the expanded order relation ({len(w.letters)} letters):")
print(evaluate_word(w, gens))
print()
print("diagram (DOT):")
print(diagram_to_dot(pres.diagram))
