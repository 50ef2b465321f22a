"""Golden expectations for the flow-discretization example.

The input system lives in data/navier_stokes.dgb.  Completion must return
exactly four elements; the two nontrivial ones are pinned here term for
term (the other two are the monic forms of the first and third input
generators).
"""

LEADING_MONOMIALS = {"u(1,0,0)", "v(1,1,0)", "v(2,0,0)", "p(2,0,0)"}

REDUCED_SECOND = """
v(1,1,0) - u(0,2,0) - v(1,0,0)
 + 2*u(0,1,0) - v(0,1,0) - u(0,0,0) + v(0,0,0)
 + H*(p(1,0,0) + u(0,0,1) - p(0,0,0)
      - (1 + v(0,1,0))*u(0,0,0) + u(0,1,0)*v(0,0,0))
"""

PRESSURE_ELEMENT = """
p(2,0,0) + p(0,2,0) - 2*(p(1,0,0) + p(0,1,0) - p(0,0,0))
 - 2*u(0,1,0)^2 - v(0,2,0)*v(1,0,0) - u(0,0,0)^2 + 2*v(0,0,0)^2
 + (3*u(0,1,0) - 2*v(1,0,0) + v(0,1,0) - u(0,2,0) + v(0,0,0))*u(0,0,0)
 - (3*v(0,1,0) + u(0,2,0) + v(1,0,0))*v(0,0,0)
 + (2*v(1,0,0) - 2*v(0,1,0) + u(0,2,0))*u(0,1,0)
 + (2*v(1,0,0) + u(0,2,0) + v(0,2,0))*v(0,1,0)
 + H*( (u(0,1,0) + v(0,1,0))*p(0,0,0) - (u(0,1,0) + v(0,1,0))*u(0,0,1)
       - p(1,0,0)*v(0,1,0) - p(1,0,0)*u(0,1,0) - (v(0,1,0) + 1)*u(0,0,0)^2
       + (p(1,0,0) - p(0,0,0) + u(0,0,1) + v(0,1,0)
          + (u(0,1,0) - v(0,1,0) - 1)*v(0,0,0)
          + (v(0,1,0) + 1)*u(0,1,0) + v(0,1,0)^2)*u(0,0,0) + u(0,1,0)*v(0,0,0)^2
       + (p(1,0,0) - p(0,0,0) + u(0,0,1) - u(0,1,0)*v(0,1,0) - u(0,1,0)^2)*v(0,0,0))
"""
