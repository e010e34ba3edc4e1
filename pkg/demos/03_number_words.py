"""
Seventy-three in four languages
===============================

Each language decomposes the same number its own way: English and Maori
say seven tens and three, French leans on a sixty grouping, Breton counts
in twenties. Some of those decompositions can be mirrored on the abacus
rods, some cannot.
"""

from suanpan import Language, NoMirrorInscription, oral_to_abacus_hint, parse_words, say

for lang in Language:
    form = say(73, lang)
    print(f"{lang.value:8s} {form.words:24s} {form.formula}")

print()
for lang in Language:
    form = say(73, lang)
    try:
        hint = oral_to_abacus_hint(form, rod_count=2)
        print(f"{lang.value:8s} mirrors as {hint.to_json()}")
    except NoMirrorInscription as err:
        print(f"{lang.value:8s} has no rod-by-rod mirror ({err.message})")

# Words parse back to numbers, tolerant of case and hyphenation
print()
print("parse 'soixante-treize'      ->", parse_words("soixante-treize", Language.FRENCH))
print("parse 'TRIZEK HA TRI UGENT'  ->", parse_words("TRIZEK HA TRI UGENT", Language.BRETON))

# The full tables run 0..99 in every language
print()
for n in (18, 50, 77, 80, 99):
    print(f"{n}: " + " / ".join(say(n, lang).words for lang in Language))
