from modules.util.exceptions.domain_exception import DomainException


class UnbalancedBracketsException(DomainException):
    pass
