"""
Orlicz modulars and norms of finitely supported functions on a discrete hypergroup,
hypergroup convolution and left translation.
"""
