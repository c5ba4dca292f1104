"""Program that computes entanglement monotones of states given as MatrixFile
JSON, writes named states, and reruns the regression table.

    python run_tempneg.py compute tempered-log-negativity omega3.json
    python run_tempneg.py state omega3 > omega3.json
    python run_tempneg.py reproduce-paper --format=tsv

Exit codes: 0 success, 1 input error, 2 degraded solver status, 3 failing
regression row.
"""

# Standard imports
import argparse
import json
import math
import sys

# Application imports
from tempneg.ChannelBounds import ChannelCapacityUpperBound
from tempneg.DistillationFidelityPhi import DistillationFidelityPhi
from tempneg.Entropies import MaxRelativeEntropy
from tempneg.GetSolverConfig import GetSolverConfig
from tempneg.MatrixFile import MatrixFileText, ReadMatrixFile, WriteMatrixFile
from tempneg.NamedStates import (Antisymmetric, Isotropic, MaximallyMixed, Omega3, Phi, PSubspace, SigmaPm,
                                 Tau, Tau3Diag, X3, X3Delta)
from tempneg.Negativities import BinegativityCheck, CoherentInformation, LogNegativity, ReeUpperBound
from tempneg.ReproduceTable import ReproduceTable
from tempneg.RobustnessPPT import GenRobustnessPPT, StdRobustnessPPT
from tempneg.TemperedNegativity import TemperedLogNegativity, TemperedNegativity
from tempneg.TemperedRobustnessPPT import TemperedRobustnessPPT
from tempneg.TempNegErrors import TempNegError
from tempneg.TradeoffRate import TradeoffRateLowerBound
from tempneg.TempNegVariables import ChoiMatrix, StatusOptimal

ExitOk=0
ExitInput=1
ExitDegraded=2
ExitRegression=3

Quantities=('log-negativity','tempered-negativity','tempered-log-negativity','std-robustness-ppt',
            'gen-robustness-ppt','tempered-robustness-ppt','coherent-info','ree-bound','dmax','phi',
            'tradeoff','cost-lower-bound','binegativity','capacity-bound')

StateNames=('phi','p-subspace','omega3','x3','x3-delta','sigma-plus','sigma-minus','tau','tau3',
            'isotropic','antisymmetric','mixed')

TsvHeader='quantity\texpected\tcomputed\ttolerance\tprovenance\tpass'

class InputError(Exception):
    """Missing or inconsistent command-line input."""

def build_parser():
    """Define and return the argument parser."""

    parser=argparse.ArgumentParser(prog='run_tempneg.py',description=__doc__.split('\n')[0])
    sub=parser.add_subparsers(dest='command',required=True)

    pc=sub.add_parser('compute',help='compute one quantity')
    pc.add_argument('quantity',choices=Quantities)
    pc.add_argument('state',nargs='?',help='MatrixFile of the input state')
    pc.add_argument('--witness',help='write the optimal witness to this MatrixFile')
    pc.add_argument('--ansatz',help='MatrixFile of the ansatz state for ree-bound')
    pc.add_argument('--sigma',help='second state: dmax reference, tempered reference, ansatz Choi state')
    pc.add_argument('--m',type=int)
    pc.add_argument('--delta',type=float)
    pc.add_argument('--tol',type=float)
    pc.add_argument('-v','--verbose',action='store_true')

    ps=sub.add_parser('state',help='write a named state as MatrixFile')
    ps.add_argument('name',choices=StateNames)
    ps.add_argument('--d',type=int,default=3)
    ps.add_argument('--f',type=float)
    ps.add_argument('--m',type=int,default=1)
    ps.add_argument('--delta',type=float)
    ps.add_argument('--out',help='output path; stdout if absent')

    pr=sub.add_parser('reproduce-paper',aliases=['reproduce'],help='rerun the regression table')
    pr.add_argument('--only',help='keep rows whose quantity contains this text')
    pr.add_argument('--format',choices=('text','tsv'),default='text')
    pr.add_argument('--tol',type=float)
    pr.add_argument('-v','--verbose',action='store_true')
    return parser

def format_value(x,digits=12):
    if math.isfinite(x):
        x=round(x,digits)+0.
    return '%.12f' % x

def solver_digits(tol):
    """Decimals an SDP value is trusted to, one fewer than the tolerance carries."""
    return max(0,math.floor(-math.log10(tol)+1e-9)-1)

def need(args,field,quantity):
    value=getattr(args,field)
    if value is None:
        raise InputError('%s requires --%s' % (quantity,field))
    return value

def compute_quantity(args,config):
    """Evaluate the requested quantity and return (value, MonotoneResult or None, shape)."""

    q=args.quantity
    if q=='tradeoff':
        return TradeoffRateLowerBound(need(args,'delta',q)),None,None

    if args.state is None:
        raise InputError('%s requires a state file' % q)

    if q=='capacity-bound':
        j=ReadMatrixFile(args.state)
        a=ReadMatrixFile(need(args,'sigma',q))
        choi=ChoiMatrix(j.matrix,j.shape.d_a,j.shape.d_b)
        ansatz=ChoiMatrix(a.matrix,a.shape.d_a,a.shape.d_b)
        return ChannelCapacityUpperBound(choi,ansatz),None,None

    rho=ReadMatrixFile(args.state)
    if q in ('tempered-negativity','tempered-robustness-ppt'):
        omega=ReadMatrixFile(args.sigma) if args.sigma else rho
        fn=TemperedNegativity if q=='tempered-negativity' else TemperedRobustnessPPT
        res=fn(rho,omega,config)
    elif q=='log-negativity':
        res=LogNegativity(rho)
    elif q=='tempered-log-negativity':
        res=TemperedLogNegativity(rho,config)
    elif q=='std-robustness-ppt':
        res=StdRobustnessPPT(rho,config=config)
    elif q=='gen-robustness-ppt':
        res=GenRobustnessPPT(rho,config=config)
    elif q=='phi':
        res=DistillationFidelityPhi(rho,need(args,'m',q),need(args,'delta',q),config)
    elif q=='cost-lower-bound':
        res=TemperedLogNegativity(rho,config) # the cost lower bound is E^tau_N itself
    elif q=='coherent-info':
        return CoherentInformation(rho),None,None
    elif q=='ree-bound':
        return ReeUpperBound(rho,ReadMatrixFile(need(args,'ansatz',q))),None,None
    elif q=='dmax':
        sigma=ReadMatrixFile(need(args,'sigma',q))
        return MaxRelativeEntropy(rho.matrix,sigma.matrix),None,None
    else:
        return BinegativityCheck(rho).rhs,None,None
    return res.value,res,rho.shape

def named_state(args):
    """Construct the NamedOperator requested by the state subcommand."""

    name=args.name
    if name=='phi':
        return Phi(args.d)
    elif name=='p-subspace':
        return PSubspace(args.d)
    elif name=='omega3':
        return Omega3()
    elif name=='x3':
        return X3()
    elif name=='x3-delta':
        return X3Delta(need(args,'delta',name))
    elif name in ('sigma-plus','sigma-minus'):
        return SigmaPm(args.d)[0 if name=='sigma-plus' else 1]
    elif name=='tau':
        return Tau(args.m)
    elif name=='tau3':
        return Tau3Diag()
    elif name=='isotropic':
        return Isotropic(args.d,need(args,'f',name))
    elif name=='antisymmetric':
        return Antisymmetric(args.d)
    else:
        return MaximallyMixed(args.d)

def format_table(rows,fmt):
    """Render ReportRows as a TSV or an aligned text table."""

    def num(x):
        return '' if x is None else '%.12g' % x

    lines=[]
    if fmt=='tsv':
        lines.append(TsvHeader)
        for r in rows:
            lines.append('\t'.join([r.quantity,num(r.expected),num(r.computed),num(r.tolerance),
                                    r.provenance,'PASS' if r.passed else 'FAIL']))
    else:
        w=max([len(r.quantity) for r in rows]+[8])
        lines.append('%-*s  %-20s  %-20s  %-10s  %-10s  %s' % (w,'quantity','expected','computed','tolerance','provenance','pass'))
        for r in rows:
            lines.append('%-*s  %-20s  %-20s  %-10s  %-10s  %s' % (w,r.quantity,num(r.expected),num(r.computed),
                                                                  num(r.tolerance),r.provenance,'PASS' if r.passed else 'FAIL'))
    return '\n'.join(lines)+'\n'

def run_compute(args):
    config=GetSolverConfig(tol=args.tol,verbosity=1 if args.verbose else 0)
    value,res,shape=compute_quantity(args,config)
    digits=12
    if res is not None and res.solution is not None:
        digits=solver_digits(config.tol)
    print(format_value(value,digits))

    if args.witness:
        if res is None or res.witness is None:
            raise InputError('%s has no witness to write' % args.quantity)
        WriteMatrixFile(args.witness,res.witness,shape)

    if res is not None and res.solver_status!=StatusOptimal:
        print('Solver status: %s' % res.solver_status,file=sys.stderr)
        return ExitDegraded
    return ExitOk

def run_state(args):
    op=named_state(args)
    if args.out:
        WriteMatrixFile(args.out,op.matrix,op.shape)
    else:
        sys.stdout.write(MatrixFileText(op.matrix,op.shape))
    return ExitOk

def run_reproduce(args):
    verbose=args.verbose and args.format!='tsv'
    config=GetSolverConfig(tol=args.tol)
    rows=ReproduceTable(only=args.only,config=config,verbose=verbose)
    sys.stdout.write(format_table(rows,args.format))
    nfail=sum(not r.passed for r in rows)
    if args.format!='tsv':
        if nfail:
            print('FAIL. %d of %d rows failed. ' % (nfail,len(rows)))
        else:
            print('SUCCESS. All %d rows passed. ' % len(rows))
    return ExitRegression if nfail else ExitOk

def main(argv=None):

    # 0 parse the command line; usage errors are input errors
    try:
        args=build_parser().parse_args(argv)
    except SystemExit as err:
        return ExitOk if err.code in (0,None) else ExitInput

    # 1 dispatch, mapping input errors to exit code 1
    try:
        if args.command=='compute':
            return run_compute(args)
        elif args.command=='state':
            return run_state(args)
        else:
            return run_reproduce(args)
    except (TempNegError,InputError,OSError,json.JSONDecodeError) as err:
        print('error: %s' % err,file=sys.stderr)
        return ExitInput

if __name__ == "__main__":
    sys.exit(main())
