"""Finite bounded posets with antitone involution: classification,
constructions and exhaustive model checking."""
