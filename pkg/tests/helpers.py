"""Label-based shorthands for writing expected values."""


def ids(p, labels):
    """Label string like 'a,b' (or '' for empty) -> frozenset of ids."""
    return frozenset(p.id_of(s) for s in labels.split(",") if s)


def ac(p, labels):
    return tuple(sorted(ids(p, labels)))
