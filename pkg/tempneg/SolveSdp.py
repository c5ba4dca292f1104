#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Primal-dual interior point solver for SdpProblem.

The problem is lowered to a real symmetric conic program

    min c.x  s.t.  A x = b,  x in the product of PSD cones (svec coordinates),

and solved through the homogeneous self-dual embedding with Nesterov-Todd
scaling and a Mehrotra predictor-corrector step. Complex Hermitian blocks are
embedded as real symmetric blocks of twice the dimension; when the data is
real (up to purely imaginary rows with zero right-hand side) the embedding is
skipped. Dependent equality rows are removed before the iteration starts.

The iteration stops when the relative primal and dual residuals, the relative
gap and the complementarity sum_b |Tr X_b Z_b| all drop below tol. If it
stalls or its step collapses first, the best iterate seen is returned, with
status optimal when that measure is within SolverConfig.near_optimal_factor
times tol and max-iterations otherwise.
"""

import time

import numpy as np
from scipy import sparse
from scipy.linalg import cholesky, cho_factor, cho_solve, eigh, eigvalsh, lu_factor, lu_solve, qr, svd, solve_triangular, LinAlgError

from tempneg.GetSolverConfig import GetSolverConfig
from tempneg.TempNegVariables import SdpSolution, StatusOptimal, StatusInfeasible, StatusUnbounded, StatusMaxIterations

RealRowTol=1e-14


class ConeBlock:
    def __init__(self,label,n,embedded):
        self.label=label #label of the user block
        self.n=n #internal real symmetric dimension
        self.embedded=embedded #True if n is twice the user dimension
        self.iu,self.ju=np.triu_indices(n)
        self.coef=np.where(self.iu==self.ju,1.,np.sqrt(2.))
        self.size=len(self.iu)
        self.offset=0 #position in the stacked svec vector

    def Svec(self,X):
        return X[self.iu,self.ju]*self.coef

    def Smat(self,v):
        X=np.zeros((self.n,self.n))
        X[self.iu,self.ju]=v/self.coef
        X[self.ju,self.iu]=v/self.coef
        return X

    def SvecMap(self):
        """Sparse n^2 x size matrix V with r.vec(X) = (r V).svec(X) for symmetric X."""
        n=self.n
        p=np.arange(self.size)
        diag=self.iu==self.ju
        off=~diag
        rows=np.concatenate([self.iu[diag]*n+self.ju[diag],self.iu[off]*n+self.ju[off],self.ju[off]*n+self.iu[off]])
        cols=np.concatenate([p[diag],p[off],p[off]])
        vals=np.concatenate([np.ones(np.sum(diag)),np.full(2*np.sum(off),1/np.sqrt(2.))])
        return sparse.csr_matrix((vals,(rows,cols)),shape=(n*n,self.size))

    def SymKron(self,W):
        """W (x)_s W in svec coordinates, the matrix of S -> W S W."""
        I,J=self.iu,self.ju
        K=W[np.ix_(I,I)]
        K*=W[np.ix_(J,J)]
        T=W[np.ix_(I,J)]
        T*=W[np.ix_(J,I)]
        K+=T
        del T
        K*=np.outer(self.coef,self.coef)/2
        return K


def EmbeddingMaps(n):
    """Maps from functionals on vec(X), X n x n Hermitian, to functionals on vec(Y), Y 2n x 2n.

    Y stands for X through X = (Y11+Y22)/2 + i(Y21-Y12)/2, so that
    r.vec(X) = Re(r) P_re vec(Y) + Im(r) P_im vec(Y) for a Hermitian functional r.
    """
    i,j=np.divmod(np.arange(n*n),n)
    m=2*n
    src=np.arange(n*n)
    P_re=sparse.csr_matrix((np.full(2*n*n,0.5),(np.concatenate([src,src]),np.concatenate([i*m+j,(n+i)*m+n+j]))),shape=(n*n,m*m))
    P_im=sparse.csr_matrix((np.concatenate([np.full(n*n,0.5),np.full(n*n,-0.5)]),(np.concatenate([src,src]),np.concatenate([i*m+n+j,(n+i)*m+j]))),shape=(n*n,m*m))
    return P_re,P_im

def Unembed(Y,n):
    return (Y[:n,:n]+Y[n:,n:])/2+1j*(Y[n:,:n]-Y[:n,n:])/2


class ConeProblem:
    def __init__(self):
        self.blocks=[] #ConeBlock list
        self.A=None #csr, m x N real
        self.b=None
        self.c=None
        self.rows=None #user row index of each internal row
        self.scale=None #row scaling, y_user_row = y_internal / scale
        self.sign=1. #-1 when the user problem maximizes
        self.complex_mode=False

    @property
    def nu(self):
        return sum(blk.n for blk in self.blocks)


def LowerProblem(problem):
    """Real symmetric cone data for an SdpProblem (unscaled, before presolve)."""
    cone=ConeProblem()
    cone.sign=-1. if problem.sense=='maximize' else 1.
    b=np.asarray(problem.rhs,dtype=float)
    m=len(b)

    rows={label:problem.ConstraintMatrix(label) for label in problem.blocks}
    C={label:problem.Objective(label) for label in problem.blocks}

    # 1. decide whether real arithmetic is exact for this problem
    re_mass=np.zeros(m)
    im_mass=np.zeros(m)
    for label in problem.blocks:
        R=rows[label]
        if R.nnz:
            re_mass+=np.asarray(abs(R.real).sum(axis=1)).ravel()
            im_mass+=np.asarray(abs(R.imag).sum(axis=1)).ravel()
    scale=np.maximum(re_mass+im_mass,1.)
    mixed=(im_mass>RealRowTol*scale)&((re_mass>RealRowTol*scale)|(np.abs(b)>RealRowTol*np.maximum(np.abs(b),1.)))
    complex_C=any(np.max(np.abs(Cb.imag),initial=0.)>RealRowTol*max(1.,np.max(np.abs(Cb),initial=0.)) for Cb in C.values())
    cone.complex_mode=bool(np.any(mixed) or complex_C)

    # 2. per-block svec rows and objective
    Ab,cb=[],[]
    offset=0
    for label,n in problem.blocks.items():
        if cone.complex_mode:
            blk=ConeBlock(label,2*n,True)
            V=blk.SvecMap()
            P_re,P_im=EmbeddingMaps(n)
            Vre=(P_re@V).tocsr()
            Vim=(P_im@V).tocsr()
            R=rows[label]
            Ab.append((sparse.csr_matrix(R.real)@Vre+sparse.csr_matrix(R.imag)@Vim).tocsr())
            rC=np.conj(C[label]).reshape(-1)
            cb.append(Vre.T@rC.real+Vim.T@rC.imag)
        else:
            blk=ConeBlock(label,n,False)
            V=blk.SvecMap()
            Ab.append((sparse.csr_matrix(rows[label].real)@V).tocsr())
            cb.append(V.T@np.real(C[label]).reshape(-1))
        blk.offset=offset
        offset+=blk.size
        cone.blocks.append(blk)

    cone.A=sparse.hstack(Ab,format='csr') if Ab else sparse.csr_matrix((m,0))
    cone.A.eliminate_zeros()
    cone.c=cone.sign*np.concatenate(cb) if cb else np.zeros(0)
    cone.b=b
    cone.rows=np.arange(m)
    cone.scale=np.ones(m)
    return cone


def Presolve(cone,config):
    """Drop zero and dependent rows; return None or a Farkas ray (b.y = 1, A^T y ~ 0).

    Rows are normalized to unit length. Independence is accepted from a
    Cholesky factor of the Gram matrix with relative pivots above the presolve
    threshold; otherwise a column-pivoted QR of the Gram matrix selects a
    maximal independent subset. Dependent rows must be consistent with the
    kept rows, b_D = T b_K with T = A_D A_K^T (A_K A_K^T)^{-1}.
    """
    A,b=cone.A,cone.b
    m=A.shape[0]
    tol=config.presolve_tol
    if m==0:
        return None

    norms=np.sqrt(np.asarray(A.multiply(A).sum(axis=1)).ravel())
    zero=norms<=1e-12*max(1.,np.max(norms,initial=0.))
    bad=zero&(np.abs(b)>1e-9*(1.+np.max(np.abs(b))))
    if np.any(bad):
        k=np.flatnonzero(bad)[0]
        y=np.zeros(m)
        y[k]=1./b[k]
        return y

    keep=np.flatnonzero(~zero)
    s=norms[keep]
    As=sparse.diags(1./s)@A[keep]
    bs=b[keep]/s

    G=(As@As.T).toarray()
    independent=True
    try:
        L=cholesky(G,lower=True)
        if np.min(np.diag(L))**2<tol:
            independent=False
    except LinAlgError:
        independent=False

    if not independent:
        R,P=qr(G,mode='r',pivoting=True)
        d=np.abs(np.diag(R))
        rank=int(np.sum(d>tol*max(d[0],1e-300)))
        K=np.sort(P[:rank])
        D=np.sort(P[rank:])
        GKK=G[np.ix_(K,K)]
        Tt=cho_solve(cho_factor(GKK),G[np.ix_(K,D)]) #T^T, rank x |D|
        e=bs[D]-Tt.T@bs[K]
        if np.max(np.abs(e),initial=0.)>1e-8*(1.+np.max(np.abs(bs))):
            yhat=np.zeros(len(keep))
            yhat[D]=e
            yhat[K]=-Tt@e
            y=np.zeros(m)
            y[keep]=yhat/s
            return y/np.dot(b,y)
        keep=keep[K]
        s=s[K]
        As=As[K]
        bs=bs[K]
        if config.verbosity:
            print('Presolve removed %d dependent rows' % len(D))

    cone.A=As.tocsr()
    cone.b=bs
    cone.rows=cone.rows[keep]
    cone.scale=s
    return None


class Iterate:
    def __init__(self,X,y,Z,tau,kappa):
        self.X=X #list of symmetric blocks
        self.y=y
        self.Z=Z
        self.tau=tau
        self.kappa=kappa

    def Copy(self):
        return Iterate([x.copy() for x in self.X],self.y.copy(),[z.copy() for z in self.Z],self.tau,self.kappa)


def _Stack(cone,mats):
    return np.concatenate([blk.Svec(M) for blk,M in zip(cone.blocks,mats)]) if cone.blocks else np.zeros(0)

def _Split(cone,v):
    return [blk.Smat(v[blk.offset:blk.offset+blk.size]) for blk in cone.blocks]

def _FactorSchur(M):
    """Return a solver for M u = r.

    M is equilibrated to unit diagonal, D M D with D = diag(M)^(-1/2), and
    factored by Cholesky with growing regularization (LU as last resort).
    Every solve is followed by one round of iterative refinement against the
    unregularized M.
    """
    n=M.shape[0]
    s=1./np.sqrt(np.maximum(np.diag(M),1e-300))
    Ms=M*np.outer(s,s)
    base=None
    reg=0.
    for _ in range(6):
        try:
            f=cho_factor(Ms+reg*np.eye(n) if reg else Ms)
            base=lambda r,f=f:cho_solve(f,r)
            break
        except LinAlgError:
            reg=1e-14 if reg==0. else reg*100
    if base is None:
        f=lu_factor(Ms)
        base=lambda r:lu_solve(f,r)

    def Solve(r):
        u=s*base(s*r)
        u+=s*base(s*(r-M@u))
        return u
    return Solve

def _MaxStep(blocks,dM,scaled_inv,lam):
    """Largest alpha keeping Lambda + alpha dM~ PSD, over all blocks."""
    amax=np.inf
    for k in range(len(blocks)):
        S=scaled_inv[k](dM[k])/np.sqrt(np.outer(lam[k],lam[k]))
        emin=eigvalsh((S+S.T)/2)[0]
        if emin<0:
            amax=min(amax,-1./emin)
    return amax

def SolveHsd(cone,config):
    """Homogeneous self-dual iteration on the lowered problem."""
    A,b,c=cone.A,cone.b,cone.c
    AT=A.T.tocsr()
    m=A.shape[0]
    blocks=cone.blocks
    Ab=[A[:,blk.offset:blk.offset+blk.size].tocsr() for blk in blocks]
    nu=cone.nu
    tol=config.tol
    normb=np.linalg.norm(b)
    normc=np.linalg.norm(c)

    it_=Iterate([np.eye(blk.n) for blk in blocks],np.zeros(m),[np.eye(blk.n) for blk in blocks],1.,1.)
    best=None
    best_metric=np.inf
    mu_hist=[]
    status=StatusMaxIterations
    alpha=1.

    if config.verbosity:
        print('SDP: %d blocks, %d constraints, svec size %d, %s arithmetic'
              % (len(blocks),m,A.shape[1],'complex-embedded' if cone.complex_mode else 'real'))
        print(' it  pobj            dobj            pinf     dinf     gap      comp     mu       step')

    niter=0
    for niter in range(config.max_iterations+1):
        X,y,Z,tau,kappa=it_.X,it_.y,it_.Z,it_.tau,it_.kappa
        x=_Stack(cone,X)
        z=_Stack(cone,Z)

        # 1. residuals and convergence measures
        Ax=A@x
        ATy=AT@y
        rp=b*tau-Ax
        Rd=c*tau-ATy-z
        pobj=c@x
        dobj=b@y
        rg=dobj-pobj-kappa
        mu=(x@z+tau*kappa)/(nu+1)
        pinf=np.linalg.norm(rp)/tau/(1+normb)
        dinf=np.linalg.norm(Rd)/tau/(1+normc)
        gap=abs(pobj-dobj)/tau/(1+abs(pobj/tau))
        # sum_b |Tr X_b Z_b| with Z_b = C_b - A_b^T y, as reported to the caller
        zy=c*tau-ATy
        comp=sum(abs(x[blk.offset:blk.offset+blk.size]@zy[blk.offset:blk.offset+blk.size]) for blk in blocks)/tau**2
        metric=max(pinf,dinf,gap,comp)

        if config.verbosity:
            print('%3d  % .8e  % .8e  %.1e  %.1e  %.1e  %.1e  %.1e  %.3f'
                  % (niter,cone.sign*pobj/tau,cone.sign*dobj/tau,pinf,dinf,gap,comp,mu,alpha))

        if metric<best_metric:
            best_metric=metric
            best=it_.Copy()

        if metric<=tol:
            status=StatusOptimal
            break
        if dobj>0 and np.linalg.norm(ATy+z)/dobj<=tol:
            status=StatusInfeasible
            break
        if -pobj>0 and np.linalg.norm(Ax)/(-pobj)<=tol:
            status=StatusUnbounded
            break
        if niter==config.max_iterations:
            break
        mu_hist.append(mu)
        if len(mu_hist)>config.stall_window and mu>mu_hist[-1-config.stall_window]/10:
            if config.verbosity:
                print('Stalled: mu has not dropped tenfold in %d iterations' % config.stall_window)
            break

        # 2. Nesterov-Todd scaling per block
        try:
            G,Gi,lam,W=[],[],[],[]
            for k,blk in enumerate(blocks):
                L=cholesky(X[k],lower=True)
                Rz=cholesky(Z[k],lower=True)
                U,sv,_=svd(L.T@Rz)
                rs=np.sqrt(sv)
                Gk=(L@U)/rs
                Gik=(U.T*rs[:,None])@solve_triangular(L,np.eye(blk.n),lower=True)
                G.append(Gk)
                Gi.append(Gik)
                lam.append(sv)
                W.append(Gk@Gk.T)
        except LinAlgError:
            if config.verbosity:
                print('Lost positive definiteness; returning best iterate')
            break

        M=np.zeros((m,m))
        for k,blk in enumerate(blocks):
            if Ab[k].nnz:
                AW=Ab[k]@blk.SymKron(W[k])
                M+=Ab[k]@AW.T
        solveM=_FactorSchur(M) if m else (lambda r:r)

        Rd_m=_Split(cone,Rd)
        WcW=_Stack(cone,[W[k]@Mk@W[k] for k,Mk in enumerate(_Split(cone,c))])
        WRdW=_Stack(cone,[W[k]@Rk@W[k] for k,Rk in enumerate(Rd_m)])
        aw=A@WcW
        q=solveM(aw+b)
        Awrdw=A@WRdW
        cWcW=c@WcW
        WcWRd=WcW@Rd
        den=(aw-b)@q-cWcW-kappa/tau

        def Direction(eta,Rs,rtk):
            D=[G[k]@Rs[k]@G[k].T for k in range(len(blocks))]
            d=_Stack(cone,D)
            p=solveM(eta*rp-A@d+eta*Awrdw)
            num=eta*rg-c@d+eta*WcWRd-rtk/tau-(aw-b)@p
            dtau=num/den
            dy=p+q*dtau
            dz=eta*Rd-AT@dy+c*dtau
            dZ=_Split(cone,dz)
            dX=[D[k]-W[k]@dZ[k]@W[k] for k in range(len(blocks))]
            dkappa=(rtk-kappa*dtau)/tau
            return dX,dy,dZ,dtau,dkappa

        scaleX=[(lambda M,k=k:Gi[k]@M@Gi[k].T) for k in range(len(blocks))]
        scaleZ=[(lambda M,k=k:G[k].T@M@G[k]) for k in range(len(blocks))]

        def StepBound(dX,dZ,dtau,dkappa):
            amax=min(_MaxStep(blocks,dX,scaleX,lam),_MaxStep(blocks,dZ,scaleZ,lam))
            if dtau<0:
                amax=min(amax,-tau/dtau)
            if dkappa<0:
                amax=min(amax,-kappa/dkappa)
            return amax

        # 3. predictor
        Rs=[-np.diag(l) for l in lam]
        dX,dy,dZ,dtau,dkappa=Direction(1.,Rs,-tau*kappa)
        a_aff=min(1.,StepBound(dX,dZ,dtau,dkappa))
        xa=_Stack(cone,[X[k]+a_aff*dX[k] for k in range(len(blocks))])
        za=_Stack(cone,[Z[k]+a_aff*dZ[k] for k in range(len(blocks))])
        mu_aff=(xa@za+(tau+a_aff*dtau)*(kappa+a_aff*dkappa))/(nu+1)
        sigma=min(max((mu_aff/mu)**3,0.),1.)

        # 4. corrector
        Rs=[]
        for k in range(len(blocks)):
            dXt=scaleX[k](dX[k])
            dZt=scaleZ[k](dZ[k])
            corr=(dXt@dZt+dZt@dXt)/2
            T=sigma*mu*np.eye(blocks[k].n)-np.diag(lam[k]**2)-corr
            Rs.append(T/((lam[k][:,None]+lam[k][None,:])/2))
        rtk=sigma*mu-tau*kappa-dtau*dkappa
        dX,dy,dZ,dtau,dkappa=Direction(1.-sigma,Rs,rtk)

        alpha=min(1.,config.step_fraction*StepBound(dX,dZ,dtau,dkappa))
        if alpha<1e-10:
            if config.verbosity:
                print('Step length %.1e too small; returning best iterate' % alpha)
            break

        Xn=[(X[k]+alpha*dX[k]) for k in range(len(blocks))]
        Zn=[(Z[k]+alpha*dZ[k]) for k in range(len(blocks))]
        it_=Iterate([(M+M.T)/2 for M in Xn],y+alpha*dy,[(M+M.T)/2 for M in Zn],tau+alpha*dtau,kappa+alpha*dkappa)

    # after a stall or a collapsed step the best iterate counts as optimal within near_optimal_factor*tol
    if status==StatusMaxIterations and best is not None:
        it_=best
        if best_metric<=config.near_optimal_factor*tol:
            status=StatusOptimal
            if config.verbosity:
                print('Accepting best iterate with metric %.1e' % best_metric)
    return status,it_,niter


def _UnconstrainedCone(cone,tol):
    """No equality rows: min c.x over the PSD cones is 0 or unbounded."""
    X,Z=[],[]
    ray=None
    for blk in cone.blocks:
        Cb=blk.Smat(cone.c[blk.offset:blk.offset+blk.size])
        w,V=eigh(Cb)
        if w[0]< -tol*max(1.,np.max(np.abs(w))):
            ray=[np.zeros((b2.n,b2.n)) for b2 in cone.blocks]
            ray[len(X)]=np.outer(V[:,0],V[:,0])
            return StatusUnbounded,ray
        X.append(np.zeros((blk.n,blk.n)))
        Z.append(Cb)
    return StatusOptimal,X


def _Lift(cone,blk,M,user_dim):
    if blk.embedded:
        return Unembed(M,user_dim)
    return np.asarray(M,dtype=complex)


def SolveSdp(problem,config=None):
    """Solve an SdpProblem.

    Parameters
    ----------
    problem : SdpProblem
    config : SolverConfig, optional
        Defaults to GetSolverConfig().

    Returns
    -------
    SdpSolution
        On optimal status the block values, multipliers and dual slack blocks
        Z_b (A*y - C for maximize, C - A*y for minimize) of the user problem.
        On infeasible status dual_multipliers is a Farkas ray y with b.y = 1
        and dual_blocks holds -A*y, which is PSD. On unbounded status
        block_values is a PSD primal ray with A(X) = 0 and unit objective gain.
    """
    if config is None:
        config=GetSolverConfig()
    tic=time.process_time()

    cone=LowerProblem(problem)
    m_user=problem.n_constraints
    dims=problem.blocks

    # 1. presolve
    ray=Presolve(cone,config)
    if ray is not None:
        sol=SdpSolution(StatusInfeasible)
        sol.dual_multipliers=ray
        sol.dual_value=float(np.dot(problem.rhs,ray))
        sol.dual_blocks={label:-problem.Adjoint(label,ray) for label in dims}
        sol.solve_time=time.process_time()-tic
        if config.verbosity:
            print('Presolve found inconsistent equalities: infeasible')
        return sol

    # 2. interior point iteration
    if cone.A.shape[0]==0:
        status,mats=_UnconstrainedCone(cone,config.tol)
        it_=Iterate(mats,np.zeros(0),mats,1.,0.)
        niter=0
    else:
        status,it_,niter=SolveHsd(cone,config)

    # 3. map back to the user problem
    sol=SdpSolution(status)
    sol.iterations=niter
    yfull=np.zeros(m_user)

    if status==StatusUnbounded:
        X={blk.label:_Lift(cone,blk,M,dims[blk.label]) for blk,M in zip(cone.blocks,it_.X)}
        gain=problem.ObjectiveValue(X)
        if gain!=0:
            X={k:v/abs(gain) for k,v in X.items()}
        sol.block_values=X
        sol.primal_value=np.inf if problem.sense=='maximize' else -np.inf
    elif status==StatusInfeasible:
        yint=np.zeros(m_user)
        yint[cone.rows]=it_.y/cone.scale
        by=float(np.dot(problem.rhs,yint))
        if by>0:
            yint/=by
        sol.dual_multipliers=yint
        sol.dual_value=float(np.dot(problem.rhs,yint))
        sol.dual_blocks={label:-problem.Adjoint(label,yint) for label in dims}
    else:
        tau=it_.tau
        yfull[cone.rows]=cone.sign*it_.y/tau/cone.scale
        X={blk.label:_Lift(cone,blk,M/tau,dims[blk.label]) for blk,M in zip(cone.blocks,it_.X)}
        sol.block_values=X
        sol.dual_multipliers=yfull
        sol.dual_blocks={label:problem.DualSlack(label,yfull) for label in dims}
        sol.primal_value=problem.ObjectiveValue(X)
        sol.dual_value=float(np.dot(problem.rhs,yfull))
        res=problem.ConstraintValues(X)-np.asarray(problem.rhs)
        sol.residuals={'primal':float(np.linalg.norm(res)/(1+np.linalg.norm(problem.rhs))),
                       'dual':float(max([max(-np.linalg.eigvalsh(Zb)[0],0.) for Zb in sol.dual_blocks.values()],default=0.)),
                       'gap':float(abs(sol.primal_value-sol.dual_value)/(1+abs(sol.primal_value))),
                       'complementarity':float(sum(abs(np.trace(X[label]@sol.dual_blocks[label]).real) for label in dims))}

    sol.solve_time=time.process_time()-tic
    if config.verbosity:
        print('Status: %s after %d iterations, primal %.10g, dual %.10g, CPU time %.2f s'
              % (sol.status,sol.iterations,sol.primal_value,sol.dual_value,sol.solve_time))
    return sol
