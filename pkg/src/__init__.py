# SemiPrim - Semiprimitive Permutation Group Toolkit
# Structure, bounds and exceptional covers of finite transitive groups
