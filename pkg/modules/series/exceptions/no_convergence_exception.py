from modules.util.exceptions.domain_exception import DomainException


class NoConvergenceException(DomainException):
    pass
