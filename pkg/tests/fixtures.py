"""Instance texts shared by the test suite."""

from fractions import Fraction


def umbrella_text(lam: Fraction | str = "3/5", sigma: Fraction | str = "2/5") -> str:
    """Umbrella instance with rain certainty ``lam`` and overload priority ``sigma``."""
    return f"""
decision_atoms: u
kb:
u -> l : 1
~u -> ~l : 1
u -> ~w : 1
r & ~u -> w : 1
c : 1
~r -> ~w : 1
c -> r : {lam}
goals:
~w : 1
~l : {sigma}
decisions:
u
~u
"""


UMBRELLA = umbrella_text()

# Rain certainty and overload priority pairs the umbrella utilities are checked on.
UMBRELLA_WEIGHTS = [
    ("1/7", "5/6"),
    ("2/3", "1/9"),
    ("3/11", "4/7"),
    ("5/8", "3/13"),
    ("1/2", "1/3"),
    ("9/10", "2/5"),
    ("4/9", "7/8"),
    ("1/20", "19/20"),
    ("6/7", "6/11"),
    ("2/5", "3/5"),
    ("11/12", "1/12"),
    ("3/4", "5/17"),
    ("7/15", "8/15"),
    ("1/3", "2/3"),
    ("13/14", "1/6"),
    ("5/9", "4/11"),
    ("2/7", "9/13"),
    ("17/19", "3/10"),
    ("1/4", "7/9"),
    ("3/5", "1/2"),
]

CONFLICT = """
decision_atoms: d
kb:
a : 4/5
~a : 3/10
d & a -> g : 1
goals:
g : 1
decisions:
d
~d
"""

# d rules out g1 and g2 together but neither alone.
MULTI_GOAL = """
decision_atoms: d
kb:
d -> ~g1 | ~g2 : 1
goals:
g1 : 1/2
g2 : 1/2
decisions:
d
~d
"""

# Equal-level beliefs contradicting each other.
STANDOFF = """
decision_atoms: d
kb:
b : 1/2
~b : 1/2
d & b -> g : 1
goals:
g : 1
decisions:
d
"""

INFEASIBLE = """
decision_atoms: d
kb:
~d : 1
goals:
g : 1
decisions:
d
"""

# The lowest and the highest CON weakness order d and ~d differently.
LITERAL_SPLIT = """
decision_atoms: d
kb:
d -> ~g1 : 1
d -> ~g2 : 1/2
~d -> ~g3 : 4/5
goals:
g1 : 1
g2 : 1/2
g3 : 4/5
decisions:
d
~d
"""

# Two ways to miss goals: a certain one and a half-certain one.
TWO_THREATS = """
decision_atoms: d
kb:
d -> ~g1 : 1
d -> ~g2 : 1/2
goals:
g1 : 1
g2 : 1/2
decisions:
d
~d
"""
