from . import census, clusters, decorated, groupoid, representations

# grupos en el orden de ejecución
REGISTRY = {
    "rep-linear": representations.CHECKS,
    "decorated": decorated.CHECKS,
    "clusters": clusters.CHECKS,
    "groupoid": groupoid.CHECKS,
    "census": census.CHECKS,
}


def check_names():
    return [name for checks in REGISTRY.values() for name in checks]


__all__ = ['REGISTRY', 'check_names']
