def get_aslkit_engine(caps=None, field=None):
    """Initialize and return the aslkit engine"""
    from core.aslkit_core import ASLKitCore
    from core.config import RATIONALS

    return ASLKitCore(caps=caps, field=field or RATIONALS)


def format_verdict(value):
    """yes / no for booleans, the value itself otherwise"""
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def format_betti_table(table):
    """Betti diagram as text; '.' marks zero entries"""
    frame = table.to_frame()
    shown = frame.astype(object).where(frame != 0, ".")
    return shown.to_string()


def format_invariants(invariants):
    """Aligned 'name: value' lines"""
    payload = invariants.to_json()
    width = max(len(k) for k in payload)
    return "\n".join(f"{k.ljust(width)} : {format_verdict(v)}" for k, v in payload.items())