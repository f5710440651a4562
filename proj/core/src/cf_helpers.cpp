#include <cmath>
#include <sstream>

#include "cf_helpers.hpp"
#include "platocf/cf_core.hpp"

namespace platocf
{
namespace
{
std::string describe(HelperId id, double r)
{
    std::ostringstream os;
    os.precision(17);
    os << "helper " << to_string(id) << " undefined at r = " << r;
    return os.str();
}
}  // namespace

std::string to_string(HelperId id)
{
    switch (id)
    {
        case HelperId::Delta34:
            return "Delta34";
        case HelperId::Delta11:
            return "Delta11";
        default:
            return "T" + std::to_string(static_cast<int>(id));
    }
}

HelperDomainError::HelperDomainError(HelperId id, double r)
    : DomainError(describe(id, r)), id_(id)
{
}

double eval_helper(HelperId id, double r)
{
    using namespace detail;
    if (!std::isfinite(r))
        throw HelperDomainError(id, r);

    double result = 0;
    if (id == HelperId::Delta34)
    {
        result = delta34(r);
    }
    else if (id == HelperId::Delta11)
    {
        result = delta11(r);
    }
    else if (static_cast<int>(id) <= 14)
    {
        double const d = delta34(r);
        switch (id)
        {
            // clang-format off
            case HelperId::T1:  result = t1(r, d); break;
            case HelperId::T2:  result = t2(r, d); break;
            case HelperId::T3:  result = t3(r, d); break;
            case HelperId::T4:  result = t4(r, d); break;
            case HelperId::T5:  result = t5(r, d); break;
            case HelperId::T6:  result = t6(r, d); break;
            case HelperId::T7:  result = t7(r, d); break;
            case HelperId::T8:  result = t8(r, d); break;
            case HelperId::T9:  result = t9(r, d); break;
            case HelperId::T10: result = t10(r, d); break;
            case HelperId::T11: result = t11(r, d); break;
            case HelperId::T12: result = t12(r, d); break;
            case HelperId::T13: result = t13(r, d); break;
            case HelperId::T14: result = t14(r, d); break;
            default: break;
            // clang-format on
        }
    }
    else
    {
        double const e = delta11(r);
        switch (id)
        {
            // clang-format off
            case HelperId::T15: result = t15(r, e); break;
            case HelperId::T16: result = t16(r, e); break;
            case HelperId::T17: result = t17(r, e); break;
            case HelperId::T18: result = t18(r, e); break;
            case HelperId::T19: result = t19(r, e); break;
            default: break;
            // clang-format on
        }
    }
    // NaN marks a negative sqrt argument or 0/0; inf marks a pole
    if (!std::isfinite(result))
        throw HelperDomainError(id, r);
    return result;
}

}  // namespace platocf
