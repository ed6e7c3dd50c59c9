"""Toy ground-atom datasets shared across the test suite.

All are small teaching/reading databases over Person and Book entities with
two binary predicates. Text builders return `.db` file contents; `*_graph`
helpers return the parsed hypergraph.
"""

from prism.relational import build_hypergraph, parse_database


def classroom_db() -> str:
    """Two teachers (P1, P2) both teaching P3..P6, who all read B1..B3."""
    lines = []
    for student in ("P3", "P4", "P5", "P6"):
        lines.append(f"Teaches(P1,{student})")
        lines.append(f"Teaches(P2,{student})")
    for student in ("P3", "P4", "P5", "P6"):
        for book in ("B1", "B2", "B3"):
            lines.append(f"Reads({student},{book})")
    return "\n".join(lines) + "\n"


def physics_db() -> str:
    """One department: professors P4, P5; students P1..P3 read B1 and
    P6..P8 read B2. P3 is taught by both professors, P1 only by P4, P2 only
    by P5; P6..P8 by both."""
    teaches = [
        ("P4", "P1"),
        ("P4", "P3"),
        ("P4", "P6"),
        ("P4", "P7"),
        ("P4", "P8"),
        ("P5", "P2"),
        ("P5", "P3"),
        ("P5", "P6"),
        ("P5", "P7"),
        ("P5", "P8"),
    ]
    reads = [
        ("P1", "B1"),
        ("P2", "B1"),
        ("P3", "B1"),
        ("P6", "B2"),
        ("P7", "B2"),
        ("P8", "B2"),
    ]
    lines = [f"Teaches({a},{b})" for a, b in teaches]
    lines += [f"Reads({a},{b})" for a, b in reads]
    return "\n".join(lines) + "\n"


def history_db() -> str:
    """Mirror department: professors P10, P11; P12..P14 read B4 and
    P9, P15, P16 read B3."""
    teaches = [
        ("P10", "P12"),
        ("P10", "P13"),
        ("P10", "P9"),
        ("P10", "P15"),
        ("P10", "P16"),
        ("P11", "P13"),
        ("P11", "P14"),
        ("P11", "P9"),
        ("P11", "P15"),
        ("P11", "P16"),
    ]
    reads = [
        ("P12", "B4"),
        ("P13", "B4"),
        ("P14", "B4"),
        ("P9", "B3"),
        ("P15", "B3"),
        ("P16", "B3"),
    ]
    lines = [f"Teaches({a},{b})" for a, b in teaches]
    lines += [f"Reads({a},{b})" for a, b in reads]
    return "\n".join(lines) + "\n"


def two_departments_db() -> str:
    """Physics and history joined by the single spurious atom Reads(P8,B4)."""
    return physics_db() + history_db() + "Reads(P8,B4)\n"


def department_variant_db() -> str:
    """Like the physics department but P4 teaches P1 and P2 (not P3), so the
    source-P4 view groups P1 and P2 with the shared students."""
    teaches = [
        ("P4", "P1"),
        ("P4", "P2"),
        ("P4", "P6"),
        ("P4", "P7"),
        ("P4", "P8"),
        ("P5", "P2"),
        ("P5", "P3"),
        ("P5", "P6"),
        ("P5", "P7"),
        ("P5", "P8"),
    ]
    reads = [
        ("P1", "B1"),
        ("P2", "B1"),
        ("P3", "B1"),
        ("P6", "B2"),
        ("P7", "B2"),
        ("P8", "B2"),
    ]
    lines = [f"Teaches({a},{b})" for a, b in teaches]
    lines += [f"Reads({a},{b})" for a, b in reads]
    return "\n".join(lines) + "\n"


def graph(db_text: str):
    return build_hypergraph(parse_database(db_text))


def single_edge_db() -> str:
    return "Knows(a,b)\n"


def triangle_db() -> str:
    return "Knows(a,b)\nKnows(b,c)\nKnows(c,a)\n"


def star_db(leaves: int = 5) -> str:
    return "".join(f"Knows(hub,leaf{i})\n" for i in range(leaves))


def chain_db(length: int = 3) -> str:
    return "".join(f"Next(n{i},n{i+1})\n" for i in range(length))


def small_fixture_graphs() -> dict:
    """Hypergraphs of at most 12 nodes used by estimation-accuracy checks."""
    return {
        "single_edge": graph(single_edge_db()),
        "triangle": graph(triangle_db()),
        "star5": graph(star_db(5)),
        "chain3": graph(chain_db(3)),
        "classroom": graph(classroom_db()),
        "physics": graph(physics_db()),
    }
